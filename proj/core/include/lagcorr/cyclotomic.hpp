#ifndef LAGCORR_CYCLOTOMIC_HPP
#define LAGCORR_CYCLOTOMIC_HPP

#include <map>

#include "lagcorr/poly.hpp"

namespace lag {

// Exact finite sums of roots of unity: sum of n_alpha * e(alpha) with
// alpha in Q/Z and rational n_alpha.  Equality is decided by reduction
// modulo a cyclotomic polynomial; no floating point.
class CycloSum {
public:
  CycloSum() = default;

  static CycloSum phase(const Rat& alpha, const Rat& coeff = 1);
  static CycloSum rational(const Rat& c) { return phase(0, c); }

  CycloSum operator+(const CycloSum& o) const;
  CycloSum operator-(const CycloSum& o) const;
  CycloSum operator*(const CycloSum& o) const;
  CycloSum conj() const;  // e(alpha) -> e(-alpha)

  bool is_zero() const;
  bool operator==(const CycloSum& o) const { return (*this - o).is_zero(); }

  // The exact rational value, when the sum is rational; errors with
  // NotRational otherwise.
  Rat rational_value() const;
  bool is_rational() const;

  const std::map<Rat, Rat>& terms() const { return terms_; }

private:
  void add_term(const Rat& alpha, const Rat& c);
  // alpha reduced to [0,1)
  std::map<Rat, Rat> terms_;
};

// Reduce a rational to the interval [0,1).
Rat mod1(const Rat& x);

// n-th cyclotomic polynomial, exact.
RatPoly cyclotomic_polynomial(unsigned long n);

}  // namespace lag

#endif
