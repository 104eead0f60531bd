#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lagcorr/isogeny.hpp"
#include "lagcorr/verify.hpp"

using namespace lag;

namespace {

Mat zdiag(const std::vector<long>& d) {
  BaseRing z = BaseRing::integers();
  Mat m(z, static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) =
      QuadElem(z, Rat(d[i]), 0);
  return m;
}

}  // namespace

TEST_CASE("degnorm") {
  BaseRing gauss = BaseRing::quadratic(-1);
  CHECK(degnorm(QuadElem(gauss, 1, 1)) == 2);        // #E[1+i]
  CHECK(degnorm(QuadElem(BaseRing::integers(), 3, 0)) == 9);  // #E[3] = 3^2
  CHECK(degnorm(QuadElem::one(gauss)) == 1);
  CHECK(degnorm(QuadElem::omega(gauss)) == 1);  // unit
  CHECK_THROWS_AS(degnorm(QuadElem::zero(gauss)), ValidationError);
}


TEST_CASE("kernel_scheme worked values") {
  BaseRing z = BaseRing::integers();
  SUBCASE("multiplication by 2 on E") {
    KernelScheme k = kernel_scheme(zdiag({2}));
    CHECK(k.component_dim == 0);
    CHECK(k.pi0_order == 4);
  }
  SUBCASE("[[2,0],[0,0]] on E^2") {
    Mat m(z, 2, 2);
    m.at(0, 0) = QuadElem(z, 2, 0);
    KernelScheme k = kernel_scheme(m);
    CHECK(k.component_dim == 1);
    CHECK(k.pi0_order == 4);
  }
  SUBCASE("identity") {
    KernelScheme k = kernel_scheme(Mat::identity(z, 3));
    CHECK(k.component_dim == 0);
    CHECK(k.pi0_order == 1);
  }
}

TEST_CASE("degree worked values") {
  BaseRing gauss = BaseRing::quadratic(-1);
  // multiplication by n on E^g has degree n^{2g}
  CHECK(degree(zdiag({3, 3})) == 81);
  // a = 1+i on the CM curve
  Mat a(gauss, 1, 1);
  a.at(0, 0) = QuadElem(gauss, 1, 1);
  CHECK(degree(a) == 2);
  // diag(1+i, 1-i): multiplicative over blocks
  Mat b(gauss, 2, 2);
  b.at(0, 0) = QuadElem(gauss, 1, 1);
  b.at(1, 1) = QuadElem(gauss, 1, -1);
  CHECK(degree(b) == 4);
  CHECK_THROWS_AS(degree(zdiag({0})), ValidationError);
}

TEST_CASE("degree equals kernel order and is multiplicative") {
  for (int d : {0, -1, -3, -7}) {
    BaseRing ring = d == 0 ? BaseRing::integers() : BaseRing::quadratic(d);
    RandomAlgebra ra(ring, 19u);
    for (int trial = 0; trial < 60; ++trial) {
      int g = static_cast<int>(ra.uniform(1, 3));
      Mat f = ra.invertible(g, 4);
      Mat h = ra.invertible(g, 4);
      CHECK(degree(f) == kernel_scheme(f).pi0_order);
      CHECK(degree(f * h) == degree(f) * degree(h));
      // degree = degnorm of the K-determinant
      CHECK(degree(f) == degnorm(det_K(f)));
    }
  }
}

TEST_CASE("rosati transpose") {
  BaseRing z = BaseRing::integers();
  BaseRing gauss = BaseRing::quadratic(-1);
  Mat n(z, 2, 2);
  n.at(0, 1) = QuadElem::one(z);
  AbVar e2{2, z};
  IsogenyHom f = make_hom(e2, e2, n);
  IsogenyHom ft = rosati_transpose(f);
  CHECK(ft.matrix.at(1, 0).is_one());
  CHECK(ft.matrix.at(0, 1).is_zero());
  CHECK(rosati_transpose(ft).matrix == f.matrix);
  Mat i(gauss, 1, 1);
  i.at(0, 0) = QuadElem::omega(gauss);
  AbVar e1{1, gauss};
  CHECK(rosati_transpose(make_hom(e1, e1, i)).matrix.at(0, 0) == -QuadElem::omega(gauss));
}

TEST_CASE("index worked values") {
  BaseRing z = BaseRing::integers();
  BaseRing gauss = BaseRing::quadratic(-1);
  CHECK(index_symmetric(Mat::identity(z, 3)) == 0);
  CHECK(index_symmetric(-Mat::identity(z, 2)) == 2);
  Mat h(gauss, 2, 2);
  h.at(0, 0) = QuadElem::one(gauss);
  h.at(1, 1) = -QuadElem::one(gauss);
  CHECK(index_symmetric(h) == 1);  // det(H + tI) = (1+t)(t-1)
}

TEST_CASE("index error paths") {
  BaseRing z = BaseRing::integers();
  Mat h(z, 2, 2);  // zero matrix: degenerate
  CHECK_THROWS_AS(index_symmetric(h), ValidationError);
  Mat bad_ref(z, 1, 1);
  bad_ref.at(0, 0) = QuadElem(z, -1, 0);
  CHECK_THROWS_AS(index_symmetric(Mat::identity(z, 1), bad_ref), ValidationError);
  Mat not_herm(z, 2, 2);
  not_herm.at(0, 1) = QuadElem::one(z);
  CHECK_THROWS_AS(index_symmetric(not_herm), ValidationError);
}

TEST_CASE("pencil index separates kernel and negative part") {
  BaseRing z = BaseRing::integers();
  Mat h(z, 3, 3);
  h.at(0, 0) = QuadElem(z, 2, 0);
  h.at(1, 1) = QuadElem(z, -5, 0);
  // third diagonal entry zero: kernel dimension 1
  PencilIndex p = pencil_index(h);
  CHECK(p.negative == 1);
  CHECK(p.kernel == 1);
  PencilIndex zero = pencil_index(Mat(z, 2, 2));
  CHECK(zero.negative == 0);
  CHECK(zero.kernel == 2);
}

TEST_CASE("index invariances randomized (both rings)") {
  for (int d : {0, -1}) {
    BaseRing ring = d == 0 ? BaseRing::integers() : BaseRing::quadratic(d);
    RandomAlgebra ra(ring, 123u);
    for (int trial = 0; trial < 40; ++trial) {
      int g = static_cast<int>(ra.uniform(1, 4));
      Mat h = ra.hermitian(g, 4);
      int idx = index_symmetric(h);
      CHECK(idx >= 0);
      CHECK(idx <= g);
      CHECK(index_symmetric(h.scaled(Rat(3))) == idx);
      CHECK(index_symmetric(-h) == g - idx);
      Mat psi = ra.invertible(g, 3);
      CHECK(index_symmetric(psi.conj_transpose() * h * psi) == idx);
      Mat h0 = ra.positive_reference(g, 2);
      CHECK(index_symmetric(h, h0) == idx);
    }
  }
}
