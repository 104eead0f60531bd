#include "lagcorr/cyclotomic.hpp"

#include <numeric>

#include "lagcorr/errors.hpp"

namespace lag {

Rat mod1(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num(x).get_mpz_t(), den(x).get_mpz_t());
  Rat out = x - Rat(q);
  return out;
}

void CycloSum::add_term(const Rat& alpha, const Rat& c) {
  if (c == 0) return;
  Rat a = mod1(alpha);
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    terms_.emplace(a, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CycloSum CycloSum::phase(const Rat& alpha, const Rat& coeff) {
  CycloSum s;
  s.add_term(alpha, coeff);
  return s;
}

CycloSum CycloSum::operator+(const CycloSum& o) const {
  CycloSum s = *this;
  for (const auto& [a, c] : o.terms_) s.add_term(a, c);
  return s;
}

CycloSum CycloSum::operator-(const CycloSum& o) const {
  CycloSum s = *this;
  for (const auto& [a, c] : o.terms_) s.add_term(a, -c);
  return s;
}

CycloSum CycloSum::operator*(const CycloSum& o) const {
  CycloSum s;
  for (const auto& [a1, c1] : terms_)
    for (const auto& [a2, c2] : o.terms_) s.add_term(a1 + a2, c1 * c2);
  return s;
}

CycloSum CycloSum::conj() const {
  CycloSum s;
  for (const auto& [a, c] : terms_) s.add_term(-a, c);
  return s;
}

RatPoly cyclotomic_polynomial(unsigned long n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
  std::vector<Rat> xn(n + 1, Rat(0));
  xn[0] = -1;
  xn[n] = 1;
  RatPoly p{std::move(xn)};
  for (unsigned long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    PolyDivRem dr = p.divrem(cyclotomic_polynomial(d));
    LAG_ASSERT(dr.r.is_zero(), "Cyclotomic", "exact division failed");
    p = dr.q;
  }
  return p;
}

namespace {

// Canonical representative in Q[x]/Phi_M with M the phase-denominator lcm.
RatPoly field_representative(const std::map<Rat, Rat>& terms) {
  if (terms.empty()) return RatPoly();
  Int m = 1;
  for (const auto& [a, c] : terms) {
    Int d = den(a);
    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
  }
  LAG_CHECK(m.fits_ulong_p(), "CycloTooLarge", "phase denominator too large");
  unsigned long mu = m.get_ui();
  std::vector<Rat> coeffs(mu, Rat(0));
  for (const auto& [a, c] : terms) {
    Rat k = a * Rat(m);
    coeffs[static_cast<size_t>(num(k).get_ui())] += c;
  }
  RatPoly p{std::move(coeffs)};
  if (p.is_zero() || mu == 1) return p;
  return p.divrem(cyclotomic_polynomial(mu)).r;
}

}  // namespace

bool CycloSum::is_zero() const { return field_representative(terms_).is_zero(); }

bool CycloSum::is_rational() const { return field_representative(terms_).degree() <= 0; }

Rat CycloSum::rational_value() const {
  RatPoly p = field_representative(terms_);
  LAG_CHECK(p.degree() <= 0, "NotRational", "cyclotomic sum is not a rational number");
  return p.coeff(0);
}

}  // namespace lag
