#include "lagcorr/quad.hpp"

#include <algorithm>

namespace lag {

BaseRing BaseRing::quadratic(int D) {
  LAG_CHECK(D == -1 || D == -2 || D == -3 || D == -7 || D == -11, "BadRing",
            "D must be one of -1, -2, -3, -7, -11 (Euclidean imaginary quadratic)");
  return BaseRing{D};
}

QuadElem::QuadElem(BaseRing ring, Rat a, Rat b) : ring_(ring), a_(std::move(a)), b_(std::move(b)) {
  LAG_CHECK(ring_.D == 0 ? b_ == 0 : true, "BadElement", "ring Z has no omega component");
}

QuadElem QuadElem::omega(BaseRing r) {
  LAG_CHECK(r.is_cm(), "NotCM", "omega requires a quadratic order");
  return QuadElem(r, 0, 1);
}

QuadElem QuadElem::sqrt_d(BaseRing r) {
  LAG_CHECK(r.is_cm(), "NotCM", "sqrt(D) requires a quadratic order");
  // omega = (1+sqrt D)/2  =>  sqrt D = 2*omega - 1; else omega = sqrt D.
  if (r.half_omega()) return QuadElem(r, -1, 2);
  return QuadElem(r, 0, 1);
}

QuadElem QuadElem::conj() const {
  if (!ring_.is_cm()) return *this;
  if (ring_.half_omega()) return QuadElem(ring_, a_ + b_, -b_);  // conj(omega) = 1 - omega
  return QuadElem(ring_, a_, -b_);
}

Rat QuadElem::norm() const {
  if (!ring_.is_cm()) return a_ * a_;
  if (ring_.half_omega()) {
    // Nm(a + b*omega) = a^2 + a*b + b^2 * (1-D)/4
    return a_ * a_ + a_ * b_ + b_ * b_ * rat(1 - ring_.D, 4);
  }
  return a_ * a_ - Rat(ring_.D) * b_ * b_;
}

Rat QuadElem::trace() const {
  if (ring_.half_omega()) return 2 * a_ + b_;
  return 2 * a_;
}

bool QuadElem::is_unit() const {
  return is_integral() && norm() == 1;
}

QuadElem QuadElem::operator+(const QuadElem& o) const {
  LAG_CHECK(ring_ == o.ring_, "RingMismatch", "mixed base rings");
  return QuadElem(ring_, a_ + o.a_, b_ + o.b_);
}

QuadElem QuadElem::operator-(const QuadElem& o) const {
  LAG_CHECK(ring_ == o.ring_, "RingMismatch", "mixed base rings");
  return QuadElem(ring_, a_ - o.a_, b_ - o.b_);
}

QuadElem QuadElem::operator*(const QuadElem& o) const {
  LAG_CHECK(ring_ == o.ring_, "RingMismatch", "mixed base rings");
  if (!ring_.is_cm()) return QuadElem(ring_, a_ * o.a_, 0);
  if (ring_.half_omega()) {
    // omega^2 = (D-1)/4 + omega
    Rat cross = b_ * o.b_;
    return QuadElem(ring_, a_ * o.a_ + cross * rat(ring_.D - 1, 4),
                    a_ * o.b_ + b_ * o.a_ + cross);
  }
  // omega^2 = D
  return QuadElem(ring_, a_ * o.a_ + Rat(ring_.D) * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
}

QuadElem QuadElem::operator/(const QuadElem& o) const {
  LAG_CHECK(!o.is_zero(), "ZeroDivisor", "division by zero");
  QuadElem t = *this * o.conj();
  Rat n = o.norm();
  return QuadElem(ring_, t.a_ / n, t.b_ / n);
}

bool QuadElem::operator==(const QuadElem& o) const {
  return ring_ == o.ring_ && a_ == o.a_ && b_ == o.b_;
}

std::string QuadElem::str() const {
  if (!ring_.is_cm() || b_ == 0) return rat_str(a_);
  std::string s = "(" + rat_str(a_);
  s += (sign(b_) >= 0 ? "+" : "-");
  Rat ab = abs(b_);
  if (ab != 1) s += rat_str(ab) + "*";
  s += "w)";
  return s;
}

std::vector<QuadElem> units_of(BaseRing r) {
  std::vector<QuadElem> u;
  u.push_back(QuadElem::one(r));
  u.push_back(-QuadElem::one(r));
  if (r.D == -1) {
    u.push_back(QuadElem::omega(r));   // i
    u.push_back(-QuadElem::omega(r));  // -i
  } else if (r.D == -3) {
    QuadElem w = QuadElem::omega(r);  // primitive 6th root of unity
    u.push_back(w);
    u.push_back(-w);
    QuadElem w2 = w * w;  // omega - 1
    u.push_back(w2);
    u.push_back(-w2);
  }
  return u;
}

QuadDivRem quad_divrem(const QuadElem& x, const QuadElem& y) {
  LAG_CHECK(!y.is_zero(), "ZeroDivisor", "division by zero");
  LAG_CHECK(x.is_integral() && y.is_integral(), "NotIntegral", "divrem needs integral inputs");
  BaseRing ring = x.ring();
  QuadElem exact = x / y;
  Int qa = round_nearest(exact.a());
  Int qb = round_nearest(exact.b());
  // Coordinate rounding alone is not enough for D = -7, -11; scan the
  // 3x3 neighborhood and keep the smallest remainder norm.
  QuadElem best_q = QuadElem::zero(ring);
  Rat best_norm = -1;
  for (int da = -1; da <= 1; ++da) {
    for (int db = -1; db <= 1; ++db) {
      QuadElem q(ring, Rat(qa + da), ring.is_cm() ? Rat(qb + db) : Rat(0));
      Rat n = (x - q * y).norm();
      if (best_norm < 0 || n < best_norm) {
        best_norm = n;
        best_q = q;
      }
      if (!ring.is_cm()) break;  // ring Z: only da varies
    }
  }
  QuadElem r = x - best_q * y;
  LAG_ASSERT(r.norm() < y.norm(), "EuclideanFailure",
             "no remainder below Nm(divisor); ring " + ring.str());
  return {best_q, r};
}

QuadElem quad_gcd(QuadElem x, QuadElem y) {
  while (!y.is_zero()) {
    QuadElem r = quad_divrem(x, y).r;
    x = y;
    y = r;
  }
  return canonical_associate(x);
}

bool divides(const QuadElem& d, const QuadElem& x) {
  if (d.is_zero()) return x.is_zero();
  return (x / d).is_integral();
}

QuadElem canonical_associate(const QuadElem& d) {
  if (d.is_zero()) return d;
  QuadElem best = d;
  bool have = false;
  for (const QuadElem& u : units_of(d.ring())) {
    QuadElem c = u * d;
    bool ok = sign(c.a()) > 0 || (c.a() == 0 && sign(c.b()) > 0);
    if (!ok) continue;
    if (!have || c.a() > best.a() || (c.a() == best.a() && c.b() > best.b())) {
      best = c;
      have = true;
    }
  }
  LAG_ASSERT(have, "Normalization", "no positive associate found");
  return best;
}

Int denominator_lcm(const QuadElem& x) {
  Int l;
  mpz_lcm(l.get_mpz_t(), den(x.a()).get_mpz_t(), den(x.b()).get_mpz_t());
  return l;
}

}  // namespace lag
