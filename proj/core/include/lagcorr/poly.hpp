#ifndef LAGCORR_POLY_HPP
#define LAGCORR_POLY_HPP

#include <vector>

#include "lagcorr/rational.hpp"

namespace lag {

class RatPoly;

// Quotient and remainder of polynomial division.
struct PolyDivRem;

// Univariate polynomial over Q, little-endian coefficients.
class RatPoly {
public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static RatPoly constant(const Rat& r) { return RatPoly({r}); }
  // t^k
  static RatPoly monomial(int k, const Rat& coeff = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rat& coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const;

  Rat eval(const Rat& x) const;

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator-() const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }

  RatPoly derivative() const;
  // Quotient and remainder; divisor nonzero.
  PolyDivRem divrem(const RatPoly& d) const;

  // Scales so the leading coefficient is 1.
  RatPoly monic() const;

  std::string str() const;

private:
  void trim();
  std::vector<Rat> c_;
};

struct PolyDivRem {
  RatPoly q, r;
};

RatPoly poly_gcd(RatPoly a, RatPoly b);

// Squarefree decomposition (Yun): p = prod f_i^i with the f_i squarefree
// and pairwise coprime; returned as the list [f_1, f_2, ...].
std::vector<RatPoly> squarefree_decomposition(const RatPoly& p);

// Number of real roots of a squarefree polynomial in the open interval
// (lo, hi), by Sturm's theorem.  p(lo) != 0 and p(hi) != 0 required.
int sturm_count_open(const RatPoly& p, const Rat& lo, const Rat& hi);

// Real roots in (0, +inf) counted with multiplicity, via iterated
// squarefree decomposition plus a Sturm chain per squarefree factor.
// Errors: ZeroPolynomial if p = 0; RootAtZero if p(0) = 0.
int sturm_positive_roots(const RatPoly& p);

// Multiplicity of the root t = 0 (the number of trailing zero coefficients).
int multiplicity_at_zero(const RatPoly& p);

// Lagrange interpolation through (x_i, y_i) with distinct x_i.
RatPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

}  // namespace lag

#endif
