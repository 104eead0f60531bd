#ifndef LAGCORR_HEISENBERG_HPP
#define LAGCORR_HEISENBERG_HPP

#include <map>
#include <vector>

#include "lagcorr/correspondence.hpp"
#include "lagcorr/cyclotomic.hpp"
#include "lagcorr/torsion.hpp"

namespace lag {

// Finite abelian group in invariant factor form n_1 | n_2 | ... | n_k;
// elements are integer vectors mod the orders.
struct FinAb {
  std::vector<long> factors;

  using Elem = std::vector<long>;

  int rank() const { return static_cast<int>(factors.size()); }
  Int order() const;
  Elem zero() const { return Elem(factors.size(), 0); }
  Elem reduce(Elem e) const;
  Elem add(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem mul(const Elem& x, long n) const;

  // Dense enumeration (mixed radix); order must fit the given bound.
  long size_checked(long bound = 1 << 20) const;
  long index_of(const Elem& e) const;
  Elem elem_at(long idx) const;

  bool operator==(const FinAb& o) const { return factors == o.factors; }
};

// Q/Z-valued pairing e(x, y) = x^T E y mod 1 on a FinAb group, given by a
// rational Gram matrix on the canonical generators.  Construction checks
// well-definedness modulo the orders and that the pairing is alternating.
struct SkewPairing {
  FinAb group;
  std::vector<std::vector<Rat>> gram;

  Rat eval(const FinAb::Elem& x, const FinAb::Elem& y) const;
  bool is_perfect() const;
};

SkewPairing make_pairing(FinAb group, std::vector<std::vector<Rat>> gram);

// Standard split pairing on (Z/n1) x ... x (Z/nk) x dual: hyperbolic sum.
// factors lists the orders of H; K = H x H^* with the canonical pairing.
SkewPairing standard_split_pairing(const std::vector<long>& h_factors);

// A pairing together with a compatible 2-cocycle c (c(x,y) - c(y,x) = e),
// stored as a full table.  The extension G = K x_c Q/Z it defines is a
// finite Heisenberg group when e is perfect.
struct HeisenbergData {
  SkewPairing pairing;
  std::vector<Rat> cocycle;  // |K| x |K| table, row-major by element index

  Rat c(long i, long j) const;
  Rat c(const FinAb::Elem& x, const FinAb::Elem& y) const;
};

HeisenbergData make_heisenberg(SkewPairing pairing, std::vector<std::vector<Rat>> cocycle_gram);
HeisenbergData make_heisenberg_table(SkewPairing pairing, std::vector<Rat> table);
// Split cocycle c((h1,x1),(h2,x2)) = x1(h2) for a standard split pairing.
HeisenbergData standard_split_heisenberg(const std::vector<long>& h_factors);

// Subgroup of a FinAb group, kept with a basis giving I = sum <w_i> and
// per-element decomposition in that basis.
struct Subgroup {
  std::vector<FinAb::Elem> elements;           // all elements, [0] = 0
  std::vector<FinAb::Elem> basis;              // independent generators
  std::vector<long> basis_orders;
  std::vector<std::vector<long>> coordinates;  // per element, in the basis

  long size() const { return static_cast<long>(elements.size()); }
};

Subgroup span_subgroup(const FinAb& g, const std::vector<FinAb::Elem>& gens);
// Every subgroup (bounded enumeration; |K| small).
std::vector<Subgroup> all_subgroups(const FinAb& g, long order_bound = 1 << 12);

bool is_isotropic(const SkewPairing& p, const Subgroup& s);

// A maximal isotropic subgroup (order |K|^{1/2}), found structurally for
// split presentations and by backtracking search in general.
Subgroup maximal_isotropic(const SkewPairing& p, long node_budget = 200000);
std::vector<Subgroup> all_maximal_isotropics(const SkewPairing& p);

// Monomial representation: each group element acts by a basis permutation
// with exact Q/Z phases.  rho(x) rho(y) = e(c(x,y)) rho(x+y).
struct MonomialRep {
  FinAb group;
  int dim = 0;
  std::vector<std::vector<int>> perm;   // per element index, size dim
  std::vector<std::vector<Rat>> phase;  // per element index, size dim

  CycloSum trace(long elem_idx) const;
};

// Splitting of the cocycle on an isotropic subgroup: s with
// s(i1) + s(i2) + c(i1, i2) = s(i1 + i2); LiftObstructed if inconsistent.
std::vector<Rat> cocycle_splitting(const HeisenbergData& h, const Subgroup& i);

// Schroedinger representation induced from a lifted maximal isotropic.
MonomialRep schrodinger(const HeisenbergData& h, const Subgroup& i);

bool satisfies_representation_property(const MonomialRep& rep, const HeisenbergData& h);
// Sum over K of |tr rho(k)|^2 equals |K| (exact cyclotomic evaluation).
bool is_irreducible_weight1(const MonomialRep& rep, const HeisenbergData& h);

MonomialRep direct_sum(const MonomialRep& a, const MonomialRep& b);
bool same_character(const MonomialRep& a, const MonomialRep& b);

// dim of the invariants under the s-lifted subgroup, by projector trace.
Int invariant_dimension(const MonomialRep& rep, const HeisenbergData& h, const Subgroup& i);

// Multiplicities of the characters of a central (isotropic, radical
// compatible) subgroup C in the Schroedinger representation:
// m_chi = dim V_G / (|Pi| dim V_Gbar) with Pi = C^* and Gbar the
// Heisenberg quotient over C-perp/C.  Verified against the brute-force
// isotypic decomposition of the explicit monomial representation.
struct MultiplicityReport {
  std::vector<std::vector<long>> characters;  // tuples over basis_orders of C
  std::vector<Int> multiplicities;
  Int dim_v = 0, dim_vbar = 0;
  Int pi_order = 1;
};
MultiplicityReport restrict_multiplicities(const HeisenbergData& h, const Subgroup& c,
                                           bool brute_force_check = true);

// The finite Heisenberg group attached to a pair of transversal
// Lagrangians inside one X: K = Y x_X Z with the biextension commutator
// pairing, Tr-normalized so that perfectness is forced (hard assertion).
struct IntersectionData {
  FinAb group;
  SkewPairing pairing;
};
IntersectionData intersection_heisenberg(const ParamCorrespondence& y,
                                         const ParamCorrespondence& z);

// Hom-space invariants of a transversal pair: cohomological degree (the
// index of the Hermitian form on F = Y x_A Z) and dimension |K|^{1/2}.
struct HomSpace {
  int degree = 0;
  Int dimension = 1;
};
HomSpace hom_space(const ParamCorrespondence& y, const ParamCorrespondence& z);

}  // namespace lag

#endif
