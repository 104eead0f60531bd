#include "lagcorr/torsion.hpp"

#include "lagcorr/snf.hpp"

namespace lag {

Mat int_mat(const std::vector<std::vector<long>>& rows) {
  BaseRing z = BaseRing::integers();
  Mat m(z, static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = QuadElem(z, Rat(rows[i][j]), 0);
  return m;
}

TorsionGroup torsion_from_generators(int n, const std::vector<std::vector<Rat>>& gens) {
  BaseRing z = BaseRing::integers();
  TorsionGroup out;
  if (gens.empty()) return out;
  int t = static_cast<int>(gens.size());

  // Common denominator q; integral generator matrix G (n x t).
  Int q = 1;
  for (const auto& g : gens) {
    LAG_CHECK(static_cast<int>(g.size()) == n, "BadShape", "generator dimension mismatch");
    for (const Rat& x : g) {
      Int d = den(x);
      mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), d.get_mpz_t());
    }
  }
  Mat g_int(z, n, t);
  for (int j = 0; j < t; ++j)
    for (int i = 0; i < n; ++i) g_int.at(i, j) = QuadElem(z, gens[j][i] * Rat(q), 0);
  LAG_ASSERT(g_int.is_integral(), "Torsion", "denominator clearing failed");

  // Relation lattice R = {a in Z^t : G a = 0 mod q}: with U G V = diag(s),
  // a = V y and s_i y_i = 0 mod q.
  SnfResult s = smith_normal_form(g_int);
  Mat scale = Mat::identity(z, t);
  for (int i = 0; i < t; ++i) {
    if (i < s.rank) {
      Int si = abs(num(s.divisors[i].a()));
      Int g;
      mpz_gcd(g.get_mpz_t(), si.get_mpz_t(), q.get_mpz_t());
      Int step;
      mpz_divexact(step.get_mpz_t(), q.get_mpz_t(), g.get_mpz_t());
      scale.at(i, i) = QuadElem(z, Rat(step), 0);
    }  // columns beyond the rank are unconstrained
  }
  Mat rel = s.V * scale;  // basis of R, full rank t

  // Z^t / R in invariant factor form.
  SnfResult r = smith_normal_form(rel);
  // Coordinates u = U a; generator i of the quotient lifts to U^{-1} e_i.
  for (int i = 0; i < t; ++i) {
    Int mi = i < r.rank ? abs(num(r.divisors[i].a())) : Int(0);
    LAG_ASSERT(mi != 0, "Torsion", "torsion group has unexpected free part");
    if (mi == 1) continue;
    LAG_CHECK(mi.fits_slong_p(), "TorsionTooLarge", "invariant factor exceeds long");
    out.factors.push_back(mi.get_si());
    std::vector<Rat> lift(n, Rat(0));
    for (int row = 0; row < n; ++row)
      for (int tt = 0; tt < t; ++tt)
        lift[row] += r.U_inv.at(tt, i).a() * gens[tt][row];
    out.lifts.push_back(std::move(lift));
  }
  // smith_normal_form emits d_1 | d_2 | ...; units were dropped, order kept
  return out;
}

Int integral_preimage_index(const std::vector<std::vector<Rat>>& e) {
  BaseRing z = BaseRing::integers();
  int k = static_cast<int>(e.size());
  if (k == 0) return 1;
  Int q = 1;
  for (const auto& row : e)
    for (const Rat& x : row) {
      Int d = den(x);
      mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), d.get_mpz_t());
    }
  Mat a(z, k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a.at(i, j) = QuadElem(z, e[i][j] * Rat(q), 0);
  SnfResult s = smith_normal_form(a);
  // L = {x : A x = 0 mod q} = V diag(q / gcd(s_i, q)) Z^k; V unimodular.
  Int index = 1;
  for (int i = 0; i < s.rank; ++i) {
    Int si = abs(num(s.divisors[i].a()));
    Int g;
    mpz_gcd(g.get_mpz_t(), si.get_mpz_t(), q.get_mpz_t());
    Int step;
    mpz_divexact(step.get_mpz_t(), q.get_mpz_t(), g.get_mpz_t());
    index *= step;
  }
  return index;
}

Mat expand_to_z(const Mat& m) {
  BaseRing z = BaseRing::integers();
  BaseRing ring = m.ring();
  Mat out(z, 2 * m.rows(), 2 * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const QuadElem& x = m.at(i, j);
      Rat a = x.a(), b = x.b();
      Rat m00, m01, m10, m11;
      if (!ring.is_cm()) {
        m00 = a; m01 = 0; m10 = 0; m11 = a;  // a tensor identity on Z^2
      } else if (ring.half_omega()) {
        // x*1 = a + b w ; x*w = b(D-1)/4 + (a+b) w
        m00 = a; m10 = b;
        m01 = b * rat(ring.D - 1, 4); m11 = a + b;
      } else {
        // x*1 = a + b w ; x*w = b D + a w
        m00 = a; m10 = b;
        m01 = b * Rat(ring.D); m11 = a;
      }
      out.at(2 * i, 2 * j) = QuadElem(z, m00, 0);
      out.at(2 * i, 2 * j + 1) = QuadElem(z, m01, 0);
      out.at(2 * i + 1, 2 * j) = QuadElem(z, m10, 0);
      out.at(2 * i + 1, 2 * j + 1) = QuadElem(z, m11, 0);
    }
  return out;
}

Mat symplectic_gram_z(const BaseRing& ring, const Mat& j_form) {
  BaseRing z = BaseRing::integers();
  int n = j_form.rows();
  Mat out(z, 2 * n, 2 * n);
  if (!ring.is_cm()) {
    // J tensor [[0,1],[-1,0]] on the period lattice.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rat c = j_form.at(i, j).a();
        out.at(2 * i, 2 * j + 1) = QuadElem(z, c, 0);
        out.at(2 * i + 1, 2 * j) = QuadElem(z, -c, 0);
      }
    return out;
  }
  // lambda = generator of the inverse different: 1/sqrt(D) when D = 1 mod 4,
  // else 1/(2 sqrt(D)).  Entries Tr(lambda conj(e_s) c e_t) on the basis
  // {1, omega} make the Gram unimodular.
  QuadElem sqrt_d = QuadElem::sqrt_d(ring);
  QuadElem den = ring.half_omega() ? sqrt_d : sqrt_d + sqrt_d;
  QuadElem lambda = QuadElem::one(ring) / den;
  QuadElem basis[2] = {QuadElem::one(ring), QuadElem::omega(ring)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const QuadElem& c = j_form.at(i, j);
      if (c.is_zero()) continue;
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) {
          Rat v = (lambda * basis[s].conj() * c * basis[t]).trace();
          out.at(2 * i + s, 2 * j + t) = QuadElem(z, v, 0);
        }
    }
  return out;
}

}  // namespace lag
