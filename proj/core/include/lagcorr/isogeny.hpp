#ifndef LAGCORR_ISOGENY_HPP
#define LAGCORR_ISOGENY_HPP

#include <vector>

#include "lagcorr/poly.hpp"
#include "lagcorr/snf.hpp"

namespace lag {

// The lattice model of the isogeny category: objects are powers E^m of a
// fixed elliptic curve with End(E) = O, morphisms are matrices over O
// (or over K when working up to isogeny).
struct AbVar {
  int m = 0;  // the variety E^m
  BaseRing ring;

  bool operator==(const AbVar& o) const { return m == o.m && ring == o.ring; }
};

struct IsogenyHom {
  AbVar source, target;
  Mat matrix;  // target.m x source.m

  bool is_integral() const { return matrix.is_integral(); }
};

IsogenyHom make_hom(AbVar source, AbVar target, Mat matrix);

// Order of E[d]: |Nm(d)| in the CM case and d^2 for ring Z (the period
// lattice of a non-CM curve has Z-rank 2 per copy of E).
Int degnorm(const QuadElem& d);

// ker(f) decomposed by Smith normal form: identity-component dimension,
// the non-unit elementary divisors, and the component group order.
struct KernelScheme {
  int component_dim = 0;
  std::vector<QuadElem> divisors;  // non-unit, nonzero
  Int pi0_order = 1;
};

KernelScheme kernel_scheme(const IsogenyHom& f);
KernelScheme kernel_scheme(const Mat& m);

// deg(f) for a square integral f with det != 0; equals the kernel order.
Int degree(const IsogenyHom& f);
Int degree(const Mat& m);

// Conjugate transpose: the Rosati dual of a homomorphism between
// principally polarized powers of E.
IsogenyHom rosati_transpose(const IsogenyHom& f);

bool is_hermitian(const Mat& m);

// Index of the symmetric isogeny given by a nondegenerate Hermitian
// matrix H, relative to a positive definite reference H0: the number of
// positive roots (with multiplicity) of det(H + t*H0).  This is the
// unique cohomological degree where the associated line bundle has
// nonvanishing cohomology; the result does not depend on H0.
int index_symmetric(const Mat& h, const Mat& h0);
int index_symmetric(const Mat& h);  // H0 = identity

// Extended pencil data for a possibly degenerate Hermitian H (reference
// the identity): the number of negative eigenvalues and the kernel
// dimension, both exact.
struct PencilIndex {
  int negative = 0;  // positive roots of det(H + tI) away from 0
  int kernel = 0;    // multiplicity of the root t = 0
};
PencilIndex pencil_index(const Mat& h);

bool is_positive_definite_hermitian(const Mat& h);

// Characteristic pencil det(H + t*H0) as an exact rational polynomial.
RatPoly char_pencil(const Mat& h, const Mat& h0);

}  // namespace lag

#endif
