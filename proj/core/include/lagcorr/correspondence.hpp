#ifndef LAGCORR_CORRESPONDENCE_HPP
#define LAGCORR_CORRESPONDENCE_HPP

#include <vector>

#include "lagcorr/isogeny.hpp"

namespace lag {

// The standard symplectic variety X = E^{2g} with coordinates split
// (x, xi) and Gram matrix J = [[0, I],[-I, 0]].
struct SymplecticSpace {
  int g = 0;
  BaseRing ring;

  int dim() const { return 2 * g; }
  bool operator==(const SymplecticSpace& o) const { return g == o.g && ring == o.ring; }
  bool operator!=(const SymplecticSpace& o) const { return !(*this == o); }
};

Mat standard_form(const SymplecticSpace& x);  // J, skew-Hermitian

// Element of U(X, Q): a 2g x 2g matrix over K with gbar^T J g = J,
// written in blocks (a, b; c, d).
struct SymplecticAuto {
  SymplecticSpace space;
  Mat mat;

  Mat block_a() const { return mat.submatrix(0, 0, space.g, space.g); }
  Mat block_b() const { return mat.submatrix(0, space.g, space.g, space.g); }
  Mat block_c() const { return mat.submatrix(space.g, 0, space.g, space.g); }
  Mat block_d() const { return mat.submatrix(space.g, space.g, space.g, space.g); }

  SymplecticAuto operator*(const SymplecticAuto& o) const;
  SymplecticAuto inverse() const;
  bool operator==(const SymplecticAuto& o) const { return space == o.space && mat == o.mat; }
};

SymplecticAuto make_symplectic(SymplecticSpace space, Mat mat);
SymplecticAuto symplectic_identity(SymplecticSpace space);
// The shear f(n) = (I, nI; 0, I) built from the principal polarization.
SymplecticAuto shear(SymplecticSpace space, const Rat& n);
// Transposed shear (I, 0; nI, I).
SymplecticAuto shear_transposed(SymplecticSpace space, const Rat& n);
// The Fourier element S = (0, I; -I, 0).
SymplecticAuto fourier_s(SymplecticSpace space);
// g_a = diag(a^-1, conj(a)) for a in K^* (genus 1).
SymplecticAuto cm_diag_auto(BaseRing ring, const QuadElem& a);

bool check_symplectic(const SymplecticAuto& g);
// b(g) invertible over K: membership in the big subset U^0.
bool in_u0(const SymplecticAuto& g);

// A correspondence from X_A to X_B presented by an integral matrix
// j : E^m -> X_A x X_B with finite kernel.  Rows are ordered
// (x_A, xi_A, x_B, xi_B); generalized Lagrangians are exactly these
// presentations, with disconnectedness arising only through composition
// bookkeeping (pi0, d below).
struct ParamCorrespondence {
  SymplecticSpace src, dst;
  Mat j;

  int m() const { return j.cols(); }
  Mat src_block() const { return j.submatrix(0, 0, 2 * src.g, j.cols()); }
  Mat dst_block() const { return j.submatrix(2 * src.g, 0, 2 * dst.g, j.cols()); }
  // Rows projecting to A x B (the abelian-variety parts).
  Mat ab_block() const;
};

ParamCorrespondence make_correspondence(SymplecticSpace src, SymplecticSpace dst, Mat j);

// Minimal integral model of the graph of a symplectic automorphism:
// j = [N I; N g] with N the least positive integer clearing denominators.
// No kernel-free reparametrization is applied.
ParamCorrespondence graph(const SymplecticAuto& g);

// The diagonal model (x, y) -> (a x, y, x, conj(a) y) of g_a (genus 1).
ParamCorrespondence cm_diag_model(BaseRing ring, const QuadElem& a);

// Lagrangians inside a single X, presented as correspondences from the
// zero space: A x {0}, {0} x Ahat, and the graph of a symmetric
// (Hermitian) homomorphism phi : A -> Ahat.
ParamCorrespondence lagrangian_a_side(const SymplecticSpace& x);
ParamCorrespondence lagrangian_dual_side(const SymplecticSpace& x);
ParamCorrespondence lagrangian_graph_of_polarization(const SymplecticSpace& x, const Mat& phi);

bool is_lagrangian(const ParamCorrespondence& l);
// Projection L -> A x B surjective (equivalently b(pi(L)) invertible).
bool is_nondegenerate(const ParamCorrespondence& l);

// pi(L): the symplectic automorphism p_{X_B} j (p_{X_A} j)^{-1}.
SymplecticAuto project_pi(const ParamCorrespondence& l);

// deg(L -> X_A) of the embedded image, zero when the projection is not
// an isogeny.
Int q_degree(const ParamCorrespondence& l);

// Opposite correspondence: swaps the X_A and X_B blocks.
ParamCorrespondence transpose_corr(const ParamCorrespondence& l);

struct ConnectedImage {
  ParamCorrespondence image;  // injective saturated presentation
  Int d = 1;                  // deg(W_0 -> image)
};
ConnectedImage connected_image(const ParamCorrespondence& l);

// M after L: the fiber product L x_{X_B} M with its invariants.
struct ComposedCorrespondence {
  ParamCorrespondence identity_component;
  Int pi0_order = 1;       // |pi0(Z)|
  Int d_image_degree = 1;  // deg(Z_0 -> j(Z_0))
  Int q_total = 0;         // deg(Z -> X_A) of the fiber product, 0 if degenerate

  // N_Z = (|pi0(Z)| / d)^{1/2}, an integer for Lagrangian inputs.
  Int n_z() const;
  // N = (|pi0(Z)| * d)^{1/2}: the multiplicity in the semiring law.
  Int n_multiplier() const;
};

ComposedCorrespondence compose(const ParamCorrespondence& l, const ParamCorrespondence& m);

// |ker(L -> A x B)|^{1/2} for a nondegenerate correspondence.
Int rank_li_kernel(const ParamCorrespondence& l);

// Smallest n >= 1 such that every (f(n) x f(n))-translate of every item
// is nondegenerate.
int find_shear(const std::vector<ParamCorrespondence>& items, int bound = 64);

}  // namespace lag

#endif
