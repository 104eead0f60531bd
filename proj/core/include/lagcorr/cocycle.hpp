#ifndef LAGCORR_COCYCLE_HPP
#define LAGCORR_COCYCLE_HPP

#include "lagcorr/correspondence.hpp"

namespace lag {

// Closed form on U^0 x U^0: lambda(g1, g2) = -i(b(g1)^-1 b(g1g2) b(g2)^-1),
// requiring all three b-blocks invertible.  Errors: NotInU0, NotHermitian.
int lambda_closed(const SymplecticAuto& g1, const SymplecticAuto& g2);

// The shift cocycle on all of U(X, Q).  Pairs in U^0 x U^0 are evaluated
// directly through the characteristic pencil of the (possibly degenerate)
// Hermitian matrix b(g1)^-1 b(g1g2) b(g2)^-1: minus the number of
// nonpositive relative eigenvalues.  Remaining pairs are rewritten with
// shears f(n) through the cocycle identity until every evaluated pair
// lies in U^0 x U^0; the result is recomputed with a second shear choice
// and both values must agree.
int lambda(const SymplecticAuto& g1, const SymplecticAuto& g2, int shear_bound = 64);

// Value on a U^0 x U^0 pair (product unconstrained); building block of
// the extension, exposed for tests.
int lambda_u0(const SymplecticAuto& g1, const SymplecticAuto& g2);

// The multiplicity cocycle N(g1, g2) = (|pi0(Z)| d)^{1/2} computed from the
// composition of the canonical embedded graph presentations; when the
// three b-blocks are invertible the q-ratio route is computed as well and
// the two values must agree.
Int n_coeff(const SymplecticAuto& g1, const SymplecticAuto& g2);
// Same with caller-chosen Lagrangian presentations of g1 and g2.
Int n_coeff_with(const SymplecticAuto& g1, const SymplecticAuto& g2,
                 const ParamCorrespondence& l1, const ParamCorrespondence& l2);

// Element (g, m, n) of the central extension of U(X, Q) by Q^* x Z.
struct ExtElement {
  SymplecticAuto g;
  Rat multiplier = 1;  // positive
  long shift = 0;
};

ExtElement ext_identity(SymplecticSpace space);
ExtElement ext_of(const SymplecticAuto& g);
// (g1, m1, n1) (g2, m2, n2) = (g1 g2, m1 m2 N(g1,g2), n1 + n2 + lambda(g1,g2)).
ExtElement ext_mul(const ExtElement& u, const ExtElement& v);

// Element of Q^* / (Q^*)^2, stored as its squarefree positive representative.
struct SquareClass {
  Int rep = 1;
  bool operator==(const SquareClass& o) const { return rep == o.rep; }
};

SquareClass squarefree_part(const Int& n);

// qbar(g): the squarefree class of q(L) for a presentation of g.
SquareClass q_bar(const ParamCorrespondence& l);
SquareClass q_bar(const SymplecticAuto& g);

// phi(g) in K^*/Q^* with iota(phi(g)) = conj(phi)/phi = det(g); CM only.
QuadElem phi_det(const SymplecticAuto& g);

}  // namespace lag

#endif
