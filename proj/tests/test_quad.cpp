#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lagcorr/quad.hpp"
#include "lagcorr/verify.hpp"

using namespace lag;

TEST_CASE("quad_norm worked values") {
  BaseRing gauss = BaseRing::quadratic(-1);
  CHECK(quad_norm(QuadElem(gauss, 1, 1)) == 2);  // (1+i)(1-i) = 2
  CHECK(quad_norm(QuadElem::zero(gauss)) == 0);
  BaseRing eis = BaseRing::quadratic(-3);
  CHECK(quad_norm(QuadElem::omega(eis)) == 1);  // (1+sqrt-3)(1-sqrt-3)/4 = 1
  BaseRing z = BaseRing::integers();
  CHECK(quad_norm(QuadElem(z, rat(-7, 2), 0)) == rat(49, 4));
}

TEST_CASE("conjugation and trace") {
  for (int d : {-1, -2, -3, -7, -11}) {
    BaseRing ring = BaseRing::quadratic(d);
    QuadElem x(ring, rat(3, 2), rat(-5, 7));
    CHECK(x.conj().conj() == x);
    CHECK(x.norm() == (x * x.conj()).a());
    CHECK((x * x.conj()).b() == 0);
    CHECK(x.trace() == (x + x.conj()).a());
    // sqrt(D)^2 = D
    QuadElem sd = QuadElem::sqrt_d(ring);
    CHECK(sd * sd == QuadElem(ring, Rat(d), 0));
    CHECK(sd.conj() == -sd);
  }
}

TEST_CASE("norm multiplicativity randomized") {
  for (int d : {0, -1, -2, -3, -7, -11}) {
    BaseRing ring = d == 0 ? BaseRing::integers() : BaseRing::quadratic(d);
    RandomAlgebra ra(ring, 91u + static_cast<unsigned>(-d));
    for (int i = 0; i < 300; ++i) {
      QuadElem x = ra.small_integral(40);
      QuadElem y = ra.small_integral(40);
      CHECK(quad_norm(x * y) == quad_norm(x) * quad_norm(y));
    }
  }
}

TEST_CASE("euclidean division in every supported order") {
  for (int d : {0, -1, -2, -3, -7, -11}) {
    BaseRing ring = d == 0 ? BaseRing::integers() : BaseRing::quadratic(d);
    RandomAlgebra ra(ring, 7u);
    for (int i = 0; i < 400; ++i) {
      QuadElem x = ra.small_integral(60);
      QuadElem y = ra.small_integral(25);
      if (y.is_zero()) continue;
      QuadDivRem dr = quad_divrem(x, y);
      CHECK(x == dr.q * y + dr.r);
      CHECK(dr.r.norm() < y.norm());
      CHECK(dr.q.is_integral());
    }
  }
}

TEST_CASE("gcd and divisibility") {
  BaseRing gauss = BaseRing::quadratic(-1);
  QuadElem a(gauss, 1, 1);   // 1+i
  QuadElem b(gauss, 2, 0);   // 2 = -i (1+i)^2
  QuadElem g = quad_gcd(a * b, b);
  CHECK(g.norm() == 4);
  CHECK(divides(a, b));
  CHECK_FALSE(divides(b, a));
}

TEST_CASE("canonical associate is deterministic and positive") {
  BaseRing gauss = BaseRing::quadratic(-1);
  QuadElem a(gauss, 1, 1);
  for (const QuadElem& u : units_of(gauss)) {
    CHECK(canonical_associate(u * a) == canonical_associate(a));
  }
  CHECK(canonical_associate(a) == a);  // 1+i is its own canonical form
  CHECK(canonical_associate(QuadElem(gauss, -3, 0)) == QuadElem(gauss, 3, 0));
  BaseRing eis = BaseRing::quadratic(-3);
  QuadElem w = QuadElem::omega(eis);
  CHECK(canonical_associate(w) == QuadElem::one(eis));
  CHECK(canonical_associate(w.scaled(2)) == QuadElem(eis, 2, 0));
}

TEST_CASE("units lists") {
  CHECK(units_of(BaseRing::integers()).size() == 2);
  CHECK(units_of(BaseRing::quadratic(-1)).size() == 4);
  CHECK(units_of(BaseRing::quadratic(-3)).size() == 6);
  CHECK(units_of(BaseRing::quadratic(-7)).size() == 2);
  for (const QuadElem& u : units_of(BaseRing::quadratic(-3))) CHECK(u.norm() == 1);
}

TEST_CASE("integrality test follows the omega convention") {
  BaseRing eis = BaseRing::quadratic(-3);
  // (1+sqrt-3)/2 = omega is integral; sqrt(-3)/2 is not.
  CHECK(QuadElem::omega(eis).is_integral());
  CHECK_FALSE(QuadElem(eis, rat(1, 2), 0).is_integral());
  CHECK(QuadElem::sqrt_d(eis).is_integral());  // 2 omega - 1
}
