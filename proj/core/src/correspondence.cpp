#include "lagcorr/correspondence.hpp"

namespace lag {

Mat standard_form(const SymplecticSpace& x) {
  Mat j(x.ring, 2 * x.g, 2 * x.g);
  QuadElem one = QuadElem::one(x.ring);
  for (int i = 0; i < x.g; ++i) {
    j.at(i, x.g + i) = one;
    j.at(x.g + i, i) = -one;
  }
  return j;
}

SymplecticAuto make_symplectic(SymplecticSpace space, Mat mat) {
  LAG_CHECK(mat.rows() == 2 * space.g && mat.cols() == 2 * space.g, "BadShape",
            "symplectic automorphism must be 2g x 2g");
  SymplecticAuto g{space, std::move(mat)};
  LAG_CHECK(check_symplectic(g), "NotSymplectic", "matrix does not preserve the standard form");
  return g;
}

SymplecticAuto symplectic_identity(SymplecticSpace space) {
  return SymplecticAuto{space, Mat::identity(space.ring, 2 * space.g)};
}

SymplecticAuto shear(SymplecticSpace space, const Rat& n) {
  Mat m = Mat::identity(space.ring, 2 * space.g);
  for (int i = 0; i < space.g; ++i) m.at(i, space.g + i) = QuadElem(space.ring, n, 0);
  return SymplecticAuto{space, std::move(m)};
}

SymplecticAuto shear_transposed(SymplecticSpace space, const Rat& n) {
  Mat m = Mat::identity(space.ring, 2 * space.g);
  for (int i = 0; i < space.g; ++i) m.at(space.g + i, i) = QuadElem(space.ring, n, 0);
  return SymplecticAuto{space, std::move(m)};
}

SymplecticAuto fourier_s(SymplecticSpace space) {
  Mat m(space.ring, 2 * space.g, 2 * space.g);
  QuadElem one = QuadElem::one(space.ring);
  for (int i = 0; i < space.g; ++i) {
    m.at(i, space.g + i) = one;
    m.at(space.g + i, i) = -one;
  }
  return SymplecticAuto{space, std::move(m)};
}

SymplecticAuto cm_diag_auto(BaseRing ring, const QuadElem& a) {
  LAG_CHECK(ring.is_cm(), "NotCM", "g_a requires a quadratic order");
  LAG_CHECK(!a.is_zero(), "ZeroDivisor", "g_a requires a nonzero a");
  SymplecticSpace x{1, ring};
  Mat m(ring, 2, 2);
  m.at(0, 0) = QuadElem::one(ring) / a;
  m.at(1, 1) = a.conj();
  return SymplecticAuto{x, std::move(m)};
}

SymplecticAuto SymplecticAuto::operator*(const SymplecticAuto& o) const {
  LAG_CHECK(space == o.space, "BadShape", "composition of automorphisms of different spaces");
  return SymplecticAuto{space, mat * o.mat};
}

SymplecticAuto SymplecticAuto::inverse() const {
  return SymplecticAuto{space, inverse_K(mat)};
}

bool check_symplectic(const SymplecticAuto& g) {
  Mat j = standard_form(g.space);
  return g.mat.conj_transpose() * j * g.mat == j;
}

bool in_u0(const SymplecticAuto& g) { return !det_K(g.block_b()).is_zero(); }

Mat ParamCorrespondence::ab_block() const {
  std::vector<int> rows;
  for (int i = 0; i < src.g; ++i) rows.push_back(i);
  for (int i = 0; i < dst.g; ++i) rows.push_back(2 * src.g + i);
  return j.select_rows(rows);
}

ParamCorrespondence make_correspondence(SymplecticSpace src, SymplecticSpace dst, Mat j) {
  LAG_CHECK(src.ring == dst.ring, "RingMismatch", "correspondence between different rings");
  LAG_CHECK(j.rows() == 2 * (src.g + dst.g), "BadShape",
            "presentation must have 2(g_A + g_B) rows");
  LAG_CHECK(j.is_integral(), "NotIntegral", "presentation matrix must be integral");
  return ParamCorrespondence{src, dst, std::move(j)};
}

ParamCorrespondence graph(const SymplecticAuto& g) {
  LAG_CHECK(check_symplectic(g), "NotSymplectic", "graph requires a symplectic automorphism");
  Int n = g.mat.denominator_lcm();
  Rat nr(n);
  Mat top = Mat::identity(g.space.ring, 2 * g.space.g).scaled(nr);
  Mat bottom = g.mat.scaled(nr);
  return ParamCorrespondence{g.space, g.space, Mat::vstack(top, bottom)};
}

ParamCorrespondence cm_diag_model(BaseRing ring, const QuadElem& a) {
  LAG_CHECK(ring.is_cm(), "NotCM", "the diagonal model requires a quadratic order");
  LAG_CHECK(a.is_integral() && !a.is_zero(), "NotIntegral",
            "the diagonal model is stated for integral a");
  SymplecticSpace x{1, ring};
  Mat j(ring, 4, 2);
  j.at(0, 0) = a;
  j.at(1, 1) = QuadElem::one(ring);
  j.at(2, 0) = QuadElem::one(ring);
  j.at(3, 1) = a.conj();
  return ParamCorrespondence{x, x, std::move(j)};
}

ParamCorrespondence lagrangian_a_side(const SymplecticSpace& x) {
  SymplecticSpace zero{0, x.ring};
  Mat j = Mat::vstack(Mat::identity(x.ring, x.g), Mat::zero(x.ring, x.g, x.g));
  return ParamCorrespondence{zero, x, std::move(j)};
}

ParamCorrespondence lagrangian_dual_side(const SymplecticSpace& x) {
  SymplecticSpace zero{0, x.ring};
  Mat j = Mat::vstack(Mat::zero(x.ring, x.g, x.g), Mat::identity(x.ring, x.g));
  return ParamCorrespondence{zero, x, std::move(j)};
}

ParamCorrespondence lagrangian_graph_of_polarization(const SymplecticSpace& x, const Mat& phi) {
  LAG_CHECK(phi.rows() == x.g && phi.cols() == x.g, "BadShape", "phi must be g x g");
  LAG_CHECK(phi.is_integral(), "NotIntegral", "phi must be integral");
  LAG_CHECK(is_hermitian(phi), "NotHermitian", "a symmetric homomorphism is Hermitian");
  SymplecticSpace zero{0, x.ring};
  Mat j = Mat::vstack(Mat::identity(x.ring, x.g), phi);
  return ParamCorrespondence{zero, x, std::move(j)};
}

bool is_lagrangian(const ParamCorrespondence& l) {
  if (l.m() != l.src.g + l.dst.g) return false;
  if (rank_K(l.j) != l.m()) return false;  // finite kernel
  // Isotropy for B_X^{-1} boxtimes B_Y.
  Mat form(l.j.ring(), l.j.rows(), l.j.rows());
  Mat ja = standard_form(l.src);
  Mat jb = standard_form(l.dst);
  for (int i = 0; i < 2 * l.src.g; ++i)
    for (int k = 0; k < 2 * l.src.g; ++k) form.at(i, k) = -ja.at(i, k);
  for (int i = 0; i < 2 * l.dst.g; ++i)
    for (int k = 0; k < 2 * l.dst.g; ++k) form.at(2 * l.src.g + i, 2 * l.src.g + k) = jb.at(i, k);
  return (l.j.conj_transpose() * form * l.j).is_zero();
}

bool is_nondegenerate(const ParamCorrespondence& l) {
  return rank_K(l.ab_block()) == l.src.g + l.dst.g;
}

SymplecticAuto project_pi(const ParamCorrespondence& l) {
  LAG_CHECK(l.src.g == l.dst.g, "DegenerateProjection",
            "pi requires source and target of equal genus");
  LAG_CHECK(l.m() == 2 * l.src.g, "DegenerateProjection", "presentation has wrong dimension");
  Mat a = l.src_block();
  LAG_CHECK(rank_K(a) == 2 * l.src.g, "DegenerateProjection",
            "projection to the source is not an isogeny");
  SymplecticAuto g{l.src, l.dst_block() * inverse_K(a)};
  LAG_CHECK(check_symplectic(g), "NotSymplectic", "presentation is not Lagrangian: pi not symplectic");
  return g;
}

Int q_degree(const ParamCorrespondence& l) {
  if (l.src.g != l.dst.g) return 0;
  Mat a = l.src_block();
  if (rank_K(a) < 2 * l.src.g || l.m() != 2 * l.src.g) return 0;
  KernelScheme num = kernel_scheme(a);
  KernelScheme par = kernel_scheme(l.j);
  LAG_CHECK(par.component_dim == 0, "NotIntegral", "presentation kernel is not finite");
  LAG_ASSERT(mpz_divisible_p(num.pi0_order.get_mpz_t(), par.pi0_order.get_mpz_t()),
             "QDegree", "parametrization kernel does not divide the projection kernel");
  Int q;
  mpz_divexact(q.get_mpz_t(), num.pi0_order.get_mpz_t(), par.pi0_order.get_mpz_t());
  return q;
}

ParamCorrespondence transpose_corr(const ParamCorrespondence& l) {
  Mat j = Mat::vstack(l.dst_block(), l.src_block());
  return ParamCorrespondence{l.dst, l.src, std::move(j)};
}

ConnectedImage connected_image(const ParamCorrespondence& l) {
  KernelScheme par = kernel_scheme(l.j);
  LAG_CHECK(par.component_dim == 0, "NotIntegral", "presentation kernel is not finite");
  SaturationResult sat = saturate(l.j);
  ConnectedImage out{ParamCorrespondence{l.src, l.dst, sat.basis}, par.pi0_order};
  return out;
}

Int ComposedCorrespondence::n_z() const {
  Int ratio, root;
  LAG_CHECK(mpz_divisible_p(pi0_order.get_mpz_t(), d_image_degree.get_mpz_t()), "NotIntegral",
            "|pi0(Z)| not divisible by d");
  mpz_divexact(ratio.get_mpz_t(), pi0_order.get_mpz_t(), d_image_degree.get_mpz_t());
  LAG_CHECK(perfect_square(ratio, &root), "NotIntegral", "N_Z is not an integer");
  return root;
}

Int ComposedCorrespondence::n_multiplier() const {
  Int root;
  Int prod = pi0_order * d_image_degree;
  LAG_CHECK(perfect_square(prod, &root), "NotIntegral", "N(g1,g2) is not an integer");
  return root;
}

ComposedCorrespondence compose(const ParamCorrespondence& l, const ParamCorrespondence& m) {
  LAG_CHECK(l.dst == m.src, "BadShape", "middle spaces do not match");
  int gb = l.dst.g;
  BaseRing ring = l.j.ring();

  // Difference map W_L x W_M -> X_B.
  Mat delta = Mat::hstack(l.dst_block(), -m.src_block());
  LAG_CHECK(rank_K(delta) == 2 * gb, "NotSurjectiveOntoMiddle",
            "L x M -> X_B is not surjective; composition undefined");

  SnfResult s = smith_normal_form(delta);
  ComposedCorrespondence out;
  for (const QuadElem& d : s.divisors)
    if (!d.is_unit()) out.pi0_order *= degnorm(d);

  // Saturated kernel lattice of the difference map: the identity component.
  std::vector<int> free_cols;
  for (int c = s.rank; c < delta.cols(); ++c) free_cols.push_back(c);
  Mat kernel_basis = s.V.select_cols(free_cols);

  // Full map W_L x W_M -> X_A x X_C.
  Mat ja = Mat::hstack(l.src_block(), Mat::zero(ring, 2 * l.src.g, m.m()));
  Mat jc = Mat::hstack(Mat::zero(ring, 2 * m.dst.g, l.m()), m.dst_block());
  Mat jac = Mat::vstack(ja, jc);

  Mat jz = jac * kernel_basis;
  out.identity_component = ParamCorrespondence{l.src, m.dst, jz};

  KernelScheme imk = kernel_scheme(jz);
  LAG_CHECK(imk.component_dim == 0, "NotIntegral",
            "composite identity component has infinite kernel; inputs not Lagrangian");
  out.d_image_degree = imk.pi0_order;

  // q(Z) = deg(Z -> X_A) of the fiber product, zero when degenerate.
  Mat stacked = Mat::vstack(delta, ja);
  if (rank_K(stacked) == stacked.cols() && rank_K(stacked) == 2 * gb + 2 * l.src.g) {
    out.q_total = kernel_scheme(stacked).pi0_order;
  } else {
    out.q_total = 0;
  }
  return out;
}

Int rank_li_kernel(const ParamCorrespondence& l) {
  LAG_CHECK(is_nondegenerate(l), "Degenerate", "projection to A x B is not surjective");
  KernelScheme k = kernel_scheme(l.ab_block());
  LAG_CHECK(k.component_dim == 0, "Degenerate", "kernel of L -> A x B is not finite");
  Int root;
  LAG_CHECK(perfect_square(k.pi0_order, &root), "NonSquareKernelOrder",
            "|ker(L -> A x B)| is not a perfect square; input not Lagrangian");
  return root;
}

namespace {

ParamCorrespondence shear_translate(const ParamCorrespondence& l, int n) {
  SymplecticAuto fa = shear(l.src, Rat(n));
  SymplecticAuto fb = shear(l.dst, Rat(n));
  Mat j = Mat::vstack(fa.mat * l.src_block(), fb.mat * l.dst_block());
  return ParamCorrespondence{l.src, l.dst, std::move(j)};
}

}  // namespace

int find_shear(const std::vector<ParamCorrespondence>& items, int bound) {
  LAG_CHECK(!items.empty(), "BadInput", "find_shear requires a nonempty list");
  for (const ParamCorrespondence& l : items)
    LAG_CHECK(is_lagrangian(l), "BadInput", "find_shear requires Lagrangian items");
  for (int n = 1; n <= bound; ++n) {
    bool ok = true;
    for (const ParamCorrespondence& l : items)
      if (!is_nondegenerate(shear_translate(l, n))) {
        ok = false;
        break;
      }
    if (ok) return n;
  }
  throw ValidationError("SearchExhausted", "no nondegenerate shear within the bound");
}

}  // namespace lag
