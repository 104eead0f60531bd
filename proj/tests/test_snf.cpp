#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lagcorr/snf.hpp"
#include "lagcorr/verify.hpp"

using namespace lag;

namespace {

Mat zmat(const std::vector<std::vector<long>>& rows) {
  BaseRing z = BaseRing::integers();
  std::vector<std::vector<QuadElem>> q;
  for (const auto& r : rows) {
    std::vector<QuadElem> row;
    for (long v : r) row.emplace_back(z, Rat(v), 0);
    q.push_back(row);
  }
  return Mat::from_rows(z, q);
}

}  // namespace

TEST_CASE("smith normal form worked values") {
  SUBCASE("diag(2,3) over Z gives (1, 6)") {
    SnfResult s = smith_normal_form(zmat({{2, 0}, {0, 3}}));
    REQUIRE(s.divisors.size() == 2);
    CHECK(s.divisors[0].a() == 1);
    CHECK(s.divisors[1].a() == 6);
  }
  SUBCASE("identity") {
    SnfResult s = smith_normal_form(Mat::identity(BaseRing::integers(), 3));
    for (const QuadElem& d : s.divisors) CHECK(d.is_one());
  }
  SUBCASE("diag(1+i, 1+i) over Z[i]") {
    BaseRing gauss = BaseRing::quadratic(-1);
    Mat m(gauss, 2, 2);
    m.at(0, 0) = QuadElem(gauss, 1, 1);
    m.at(1, 1) = QuadElem(gauss, 1, 1);
    SnfResult s = smith_normal_form(m);
    REQUIRE(s.divisors.size() == 2);
    CHECK(s.divisors[0] == QuadElem(gauss, 1, 1));
    CHECK(s.divisors[1] == QuadElem(gauss, 1, 1));
  }
}

TEST_CASE("kernel_lattice worked values") {
  SUBCASE("[1, -1] has kernel (1,1)") {
    Mat k = kernel_lattice(zmat({{1, -1}}));
    REQUIRE(k.cols() == 1);
    CHECK(k.at(0, 0) == k.at(1, 0));
    CHECK(k.at(0, 0).norm() == 1);
  }
  SUBCASE("[2, -2] has saturated kernel (1,1), not (2,2)") {
    Mat k = kernel_lattice(zmat({{2, -2}}));
    REQUIRE(k.cols() == 1);
    CHECK(k.at(0, 0).norm() == 1);
    CHECK(k.at(0, 0) == k.at(1, 0));
  }
  SUBCASE("identity has empty kernel") {
    CHECK(kernel_lattice(Mat::identity(BaseRing::integers(), 2)).cols() == 0);
  }
}

TEST_CASE("saturate worked values") {
  SUBCASE("(2,0) in Z^2") {
    SaturationResult s = saturate(zmat({{2}, {0}}));
    CHECK(s.index == 2);
    CHECK(s.basis.cols() == 1);
    CHECK(s.basis.at(0, 0).norm() == 1);
    CHECK(s.basis.at(1, 0).is_zero());
  }
  SUBCASE("(1+i, 0) in Z[i]^2 has index Nm(1+i) = 2") {
    BaseRing gauss = BaseRing::quadratic(-1);
    Mat b(gauss, 2, 1);
    b.at(0, 0) = QuadElem(gauss, 1, 1);
    SaturationResult s = saturate(b);
    CHECK(s.index == 2);
    CHECK(s.basis.at(0, 0).is_unit());
    CHECK(s.basis.at(1, 0).is_zero());
  }
  SUBCASE("already saturated input has index 1") {
    SaturationResult s = saturate(zmat({{1, 0}, {0, 1}, {3, 5}}));
    CHECK(s.index == 1);
  }
  SUBCASE("dependent columns are rejected") {
    CHECK_THROWS_AS(saturate(zmat({{1, 2}, {2, 4}})), ValidationError);
  }
}

TEST_CASE("randomized SNF contract") {
  for (int d : {0, -1, -2, -3, -7, -11}) {
    BaseRing ring = d == 0 ? BaseRing::integers() : BaseRing::quadratic(d);
    RandomAlgebra ra(ring, 5u + static_cast<unsigned>(-d));
    for (int trial = 0; trial < 60; ++trial) {
      int rows = static_cast<int>(ra.uniform(1, 5));
      int cols = static_cast<int>(ra.uniform(1, 5));
      Mat m(ring, rows, cols);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = ra.small_integral(8);
      SnfResult s = smith_normal_form(m);
      CHECK(s.U * m * s.V == s.diagonal(rows, cols));
      CHECK(s.U * s.U_inv == Mat::identity(ring, rows));
      CHECK(s.V * s.V_inv == Mat::identity(ring, cols));
      CHECK(is_unimodular(s.U));
      CHECK(is_unimodular(s.V));
      CHECK(s.rank == rank_K(m));
      for (size_t k = 0; k + 1 < s.divisors.size(); ++k)
        CHECK(divides(s.divisors[k], s.divisors[k + 1]));
      for (const QuadElem& dv : s.divisors) CHECK(dv == canonical_associate(dv));
      Mat ker = kernel_lattice(m);
      CHECK(ker.cols() == cols - s.rank);
      CHECK((m * ker).is_zero());
    }
  }
}

TEST_CASE("field operations over K") {
  BaseRing gauss = BaseRing::quadratic(-1);
  Mat m(gauss, 2, 2);
  m.at(0, 0) = QuadElem(gauss, 0, 1);   // i
  m.at(0, 1) = QuadElem(gauss, 1, 0);
  m.at(1, 0) = QuadElem(gauss, -1, 0);
  m.at(1, 1) = QuadElem(gauss, 0, 1);   // det = i*i + 1 = 0
  CHECK(det_K(m).is_zero());
  CHECK(rank_K(m) == 1);
  m.at(1, 1) = QuadElem(gauss, 0, 2);
  CHECK_FALSE(det_K(m).is_zero());
  Mat inv = inverse_K(m);
  CHECK(m * inv == Mat::identity(gauss, 2));
}
