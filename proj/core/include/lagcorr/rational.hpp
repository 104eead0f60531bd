#ifndef LAGCORR_RATIONAL_HPP
#define LAGCORR_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "lagcorr/errors.hpp"

namespace lag {

// Exact arithmetic throughout: rationals are GMP mpq, integers GMP mpz.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n) { return Rat(n); }
inline Rat rat(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int num(const Rat& r) { return r.get_num(); }
inline Int den(const Rat& r) { return r.get_den(); }

// Parses "p" or "p/q"; exact, no floating point anywhere.
inline Rat rat_parse(const std::string& s) {
  try {
    Rat r(s);
    r.canonicalize();
    LAG_CHECK(r.get_den() != 0, "BadRational", "zero denominator in '" + s + "'");
    return r;
  } catch (const std::invalid_argument&) {
    throw ValidationError("BadRational", "cannot parse '" + s + "'");
  }
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline int sign(const Rat& r) { return sgn(r); }

// Nearest integer; ties round down.  Used by the Euclidean division in
// quadratic orders, where any representative within 1/2 works.
inline Int round_nearest(const Rat& r) {
  Int q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num(r).get_mpz_t(), den(r).get_mpz_t());
  // q = floor(r); round up when fractional part > 1/2.
  if (Rat(rem * 2) > Rat(den(r))) q += 1;
  return q;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
  Rat out = 1;
  Rat b = base;
  unsigned long k = e;
  while (k) {
    if (k & 1) out *= b;
    b *= b;
    k >>= 1;
  }
  return out;
}

// True iff n is a perfect square; if so *root receives the square root.
inline bool perfect_square(const Int& n, Int* root = nullptr) {
  if (n < 0) return false;
  Int r = sqrt(n);
  if (r * r == n) {
    if (root) *root = r;
    return true;
  }
  return false;
}

}  // namespace lag

#endif
