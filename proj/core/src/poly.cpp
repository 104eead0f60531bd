#include "lagcorr/poly.hpp"

#include <algorithm>
#include <sstream>

#include "lagcorr/errors.hpp"

namespace lag {

namespace {
const Rat kZero = 0;
}

RatPoly RatPoly::monomial(int k, const Rat& coeff) {
  std::vector<Rat> c(k + 1, Rat(0));
  c[k] = coeff;
  return RatPoly(std::move(c));
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& RatPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

const Rat& RatPoly::leading() const {
  LAG_CHECK(!c_.empty(), "ZeroPolynomial", "zero polynomial has no leading coefficient");
  return c_.back();
}

Rat RatPoly::eval(const Rat& x) const {
  Rat v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
  std::vector<Rat> c = c_;
  for (Rat& x : c) x = -x;
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(c));
}

RatPoly RatPoly::derivative() const {
  if (degree() <= 0) return RatPoly();
  std::vector<Rat> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return RatPoly(std::move(c));
}

PolyDivRem RatPoly::divrem(const RatPoly& d) const {
  LAG_CHECK(!d.is_zero(), "ZeroPolynomial", "division by zero polynomial");
  RatPoly r = *this;
  std::vector<Rat> q(std::max(0, degree() - d.degree() + 1), Rat(0));
  while (!r.is_zero() && r.degree() >= d.degree()) {
    Rat f = r.leading() / d.leading();
    int k = r.degree() - d.degree();
    q[k] = f;
    r = r - d * RatPoly::monomial(k, f);
  }
  return {RatPoly(std::move(q)), r};
}

RatPoly RatPoly::monic() const {
  LAG_CHECK(!is_zero(), "ZeroPolynomial", "zero polynomial has no monic form");
  std::vector<Rat> c = c_;
  Rat l = c.back();
  for (Rat& x : c) x /= l;
  return RatPoly(std::move(c));
}

std::string RatPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (int i = degree(); i >= 0; --i) {
    if (coeff(i) == 0) continue;
    if (i != degree()) os << " + ";
    os << rat_str(coeff(i));
    if (i > 0) os << "*t^" << i;
  }
  return os.str();
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a.divrem(b).r;
    a = b;
    b = r;
  }
  return a.is_zero() ? a : a.monic();
}

std::vector<RatPoly> squarefree_decomposition(const RatPoly& p) {
  LAG_CHECK(!p.is_zero(), "ZeroPolynomial", "squarefree decomposition of zero");
  // Yun's algorithm over Q (characteristic zero).
  std::vector<RatPoly> out;
  RatPoly a = p.monic();
  if (a.degree() == 0) return out;
  RatPoly da = a.derivative();
  RatPoly g = poly_gcd(a, da);
  RatPoly w = a.divrem(g).q;
  RatPoly y = da.divrem(g).q;
  while (w.degree() > 0) {
    RatPoly z = y - w.derivative();
    RatPoly f = poly_gcd(w, z);
    out.push_back(f);
    w = w.divrem(f).q;
    y = z.divrem(f).q;
  }
  return out;
}

namespace {

// Sturm chain with sign-preserving primitive scaling to curb blowup.
std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> chain;
  chain.push_back(p);
  chain.push_back(p.derivative());
  while (!chain.back().is_zero()) {
    const RatPoly& s0 = chain[chain.size() - 2];
    const RatPoly& s1 = chain[chain.size() - 1];
    RatPoly r = -(s0.divrem(s1).r);
    if (!r.is_zero()) {
      // divide by |leading| to keep coefficients modest; sign unchanged
      Rat scale = abs(r.leading());
      std::vector<Rat> c = r.coeffs();
      for (Rat& x : c) x /= scale;
      r = RatPoly(std::move(c));
    }
    chain.push_back(r);
  }
  chain.pop_back();
  return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rat& x) {
  int var = 0, prev = 0;
  for (const RatPoly& s : chain) {
    int sg = sign(s.eval(x));
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++var;
    prev = sg;
  }
  return var;
}

// Cauchy bound: all real roots lie in (-B, B).
Rat cauchy_bound(const RatPoly& p) {
  Rat m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rat(abs(p.coeff(i))));
  return 1 + m / abs(p.leading());
}

}  // namespace

int sturm_count_open(const RatPoly& p, const Rat& lo, const Rat& hi) {
  LAG_CHECK(!p.is_zero(), "ZeroPolynomial", "Sturm count of zero polynomial");
  LAG_CHECK(p.eval(lo) != 0 && p.eval(hi) != 0, "RootAtEndpoint",
            "Sturm interval endpoints must not be roots");
  if (p.degree() == 0) return 0;
  auto chain = sturm_chain(p);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

int sturm_positive_roots(const RatPoly& p) {
  LAG_CHECK(!p.is_zero(), "ZeroPolynomial", "root count of the zero polynomial");
  LAG_CHECK(p.coeff(0) != 0, "RootAtZero", "p(0) = 0; clear zero roots first");
  int total = 0;
  std::vector<RatPoly> factors = squarefree_decomposition(p);
  for (size_t i = 0; i < factors.size(); ++i) {
    const RatPoly& f = factors[i];
    if (f.degree() <= 0) continue;
    Rat bound = cauchy_bound(f);
    total += static_cast<int>(i + 1) * sturm_count_open(f, 0, bound);
  }
  return total;
}

int multiplicity_at_zero(const RatPoly& p) {
  LAG_CHECK(!p.is_zero(), "ZeroPolynomial", "multiplicity at zero of the zero polynomial");
  int k = 0;
  while (p.coeff(k) == 0) ++k;
  return k;
}

RatPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  LAG_CHECK(xs.size() == ys.size() && !xs.empty(), "BadInterpolation",
            "need matching nonempty node/value lists");
  RatPoly acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    RatPoly term = RatPoly::constant(ys[i]);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      LAG_CHECK(xs[i] != xs[j], "BadInterpolation", "repeated interpolation node");
      // (t - x_j) / (x_i - x_j)
      Rat d = xs[i] - xs[j];
      term = term * RatPoly({-xs[j] / d, 1 / d});
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace lag
