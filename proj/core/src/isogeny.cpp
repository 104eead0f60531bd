#include "lagcorr/isogeny.hpp"

namespace lag {

IsogenyHom make_hom(AbVar source, AbVar target, Mat matrix) {
  LAG_CHECK(source.ring == target.ring, "RingMismatch", "source/target over different rings");
  LAG_CHECK(matrix.rows() == target.m && matrix.cols() == source.m, "BadShape",
            "matrix shape must be target.m x source.m");
  return IsogenyHom{source, target, std::move(matrix)};
}

Int degnorm(const QuadElem& d) {
  LAG_CHECK(!d.is_zero(), "ZeroDivisor", "degnorm of zero");
  LAG_CHECK(d.is_integral(), "NotIntegral", "degnorm needs an integral element");
  if (d.ring().is_cm()) return num(d.norm());
  Int a = num(d.a());
  return a * a;
}

KernelScheme kernel_scheme(const Mat& m) {
  SnfResult s = smith_normal_form(m);
  KernelScheme k;
  k.component_dim = m.cols() - s.rank;
  for (const QuadElem& d : s.divisors) {
    if (d.is_unit()) continue;
    k.divisors.push_back(d);
    k.pi0_order *= degnorm(d);
  }
  return k;
}

KernelScheme kernel_scheme(const IsogenyHom& f) {
  LAG_CHECK(f.is_integral(), "NotIntegral", "kernel scheme needs an integral homomorphism");
  return kernel_scheme(f.matrix);
}

Int degree(const Mat& m) {
  LAG_CHECK(m.rows() == m.cols(), "NotAnIsogeny", "degree needs a square matrix");
  LAG_CHECK(m.is_integral(), "NotIntegral", "degree needs integral entries");
  LAG_CHECK(!det_K(m).is_zero(), "NotAnIsogeny", "determinant vanishes");
  KernelScheme k = kernel_scheme(m);
  return k.pi0_order;
}

Int degree(const IsogenyHom& f) { return degree(f.matrix); }

IsogenyHom rosati_transpose(const IsogenyHom& f) {
  return IsogenyHom{f.target, f.source, f.matrix.conj_transpose()};
}

bool is_hermitian(const Mat& m) {
  return m.rows() == m.cols() && m.conj_transpose() == m;
}

RatPoly char_pencil(const Mat& h, const Mat& h0) {
  LAG_CHECK(h.rows() == h.cols() && h0.rows() == h0.cols() && h.rows() == h0.rows(), "BadShape",
            "pencil needs square matrices of equal size");
  int g = h.rows();
  std::vector<Rat> xs, ys;
  for (int t = 0; t <= g; ++t) {
    QuadElem d = det_K(h + h0.scaled(Rat(t)));
    // Hermitian determinants are fixed by conjugation, hence rational.
    LAG_ASSERT(d.is_rational(), "NonRealDeterminant",
               "pencil determinant not rational; input not Hermitian?");
    xs.push_back(Rat(t));
    ys.push_back(d.a());
  }
  return interpolate(xs, ys);
}

bool is_positive_definite_hermitian(const Mat& h) {
  if (!is_hermitian(h)) return false;
  for (int k = 1; k <= h.rows(); ++k) {
    QuadElem minor = det_K(h.submatrix(0, 0, k, k));
    if (!minor.is_rational() || sign(minor.a()) <= 0) return false;
  }
  return true;
}

int index_symmetric(const Mat& h, const Mat& h0) {
  LAG_CHECK(is_hermitian(h), "NotHermitian", "index needs a Hermitian matrix");
  LAG_CHECK(is_positive_definite_hermitian(h0), "NonPositiveReference",
            "reference polarization must be positive definite");
  LAG_CHECK(!det_K(h).is_zero(), "DegenerateH", "index needs a nondegenerate matrix");
  RatPoly p = char_pencil(h, h0);
  return sturm_positive_roots(p);
}

int index_symmetric(const Mat& h) {
  return index_symmetric(h, Mat::identity(h.ring(), h.rows()));
}

PencilIndex pencil_index(const Mat& h) {
  LAG_CHECK(is_hermitian(h), "NotHermitian", "pencil index needs a Hermitian matrix");
  if (h.rows() == 0) return {0, 0};
  RatPoly p = char_pencil(h, Mat::identity(h.ring(), h.rows()));
  PencilIndex out;
  out.kernel = multiplicity_at_zero(p);
  if (out.kernel > 0) {
    std::vector<Rat> c(p.coeffs().begin() + out.kernel, p.coeffs().end());
    p = RatPoly(std::move(c));
  }
  out.negative = p.degree() <= 0 ? 0 : sturm_positive_roots(p);
  return out;
}

}  // namespace lag
