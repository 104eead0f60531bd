#ifndef LAGCORR_QUAD_HPP
#define LAGCORR_QUAD_HPP

#include <string>
#include <vector>

#include "lagcorr/rational.hpp"

namespace lag {

// The coefficient ring of the model: either Z (ordinary elliptic curve,
// End = Z) or the maximal order of an imaginary quadratic field Q(sqrt D)
// for D in {-1,-2,-3,-7,-11}.  These are exactly the norm-Euclidean
// imaginary quadratic discriminant choices, so every module computation
// below can rely on a Euclidean algorithm.
//
// Generator convention: omega = (1+sqrt D)/2 when D = 1 mod 4, else
// omega = sqrt D.  Elements are a + b*omega with rational a, b; the
// element is integral iff a and b are integers.
struct BaseRing {
  int D = 0;  // 0 encodes the ring Z

  bool is_cm() const { return D != 0; }
  // D = 1 mod 4 (D negative): -3, -7, -11.
  bool half_omega() const { return D != 0 && ((D % 4) + 4) % 4 == 1; }

  static BaseRing integers() { return BaseRing{0}; }
  static BaseRing quadratic(int D);

  bool operator==(const BaseRing& o) const { return D == o.D; }
  bool operator!=(const BaseRing& o) const { return D != o.D; }

  std::string str() const { return D == 0 ? "Z" : "Z[omega], D=" + std::to_string(D); }
};

// Element a + b*omega of K = Frac(O); exact rational coordinates.
class QuadElem {
public:
  QuadElem() : ring_{0}, a_(0), b_(0) {}
  QuadElem(BaseRing ring, Rat a, Rat b);
  explicit QuadElem(long n) : ring_{0}, a_(n), b_(0) {}

  static QuadElem zero(BaseRing r) { return QuadElem(r, 0, 0); }
  static QuadElem one(BaseRing r) { return QuadElem(r, 1, 0); }
  static QuadElem omega(BaseRing r);
  // The element sqrt(D) itself (only for CM rings).
  static QuadElem sqrt_d(BaseRing r);

  const BaseRing& ring() const { return ring_; }
  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }
  bool is_integral() const { return is_integer(a_) && is_integer(b_); }
  bool is_rational() const { return b_ == 0; }
  bool is_unit() const;

  QuadElem conj() const;
  Rat norm() const;   // x * conj(x), a nonnegative rational
  Rat trace() const;  // x + conj(x)

  QuadElem operator-() const { return QuadElem(ring_, -a_, -b_); }
  QuadElem operator+(const QuadElem& o) const;
  QuadElem operator-(const QuadElem& o) const;
  QuadElem operator*(const QuadElem& o) const;
  QuadElem operator/(const QuadElem& o) const;  // exact division in K
  QuadElem& operator+=(const QuadElem& o) { return *this = *this + o; }
  QuadElem& operator-=(const QuadElem& o) { return *this = *this - o; }
  QuadElem& operator*=(const QuadElem& o) { return *this = *this * o; }

  bool operator==(const QuadElem& o) const;
  bool operator!=(const QuadElem& o) const { return !(*this == o); }

  QuadElem scaled(const Rat& r) const { return QuadElem(ring_, a_ * r, b_ * r); }

  std::string str() const;

private:
  BaseRing ring_;
  Rat a_, b_;
};

// All units of O (finite: 2, 4 or 6 of them).
std::vector<QuadElem> units_of(BaseRing r);

// Euclidean division: q, r with x = q*y + r and Nm(r) < Nm(y).
// Preconditions: x, y integral, y != 0.  Works for every supported ring
// (norm-Euclidean); throws InvariantViolation if the norm bound fails.
struct QuadDivRem {
  QuadElem q, r;
};
QuadDivRem quad_divrem(const QuadElem& x, const QuadElem& y);

QuadElem quad_gcd(QuadElem x, QuadElem y);

// True iff d divides x in O (both integral).
bool divides(const QuadElem& d, const QuadElem& x);

// Canonical associate: among the unit multiples of d, the one with
// (a, b) lexicographically maximal subject to a > 0, or a = 0 and b > 0.
// For the ring Z this is |d|.  Fixes golden-test output.
QuadElem canonical_associate(const QuadElem& d);

// Least positive integer N with N*x integral.
Int denominator_lcm(const QuadElem& x);

// Nm(x) as an exact rational.
inline Rat quad_norm(const QuadElem& x) { return x.norm(); }

}  // namespace lag

#endif
