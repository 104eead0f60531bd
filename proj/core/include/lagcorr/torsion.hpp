#ifndef LAGCORR_TORSION_HPP
#define LAGCORR_TORSION_HPP

#include <vector>

#include "lagcorr/matrix.hpp"

namespace lag {

// A finite subgroup of (Q/Z)^N given by generators, brought to invariant
// factor form n_1 | n_2 | ... by integer Smith reduction.  Lifts of the
// canonical generators are kept so that bilinear data can be evaluated
// on representatives.
struct TorsionGroup {
  std::vector<long> factors;            // invariant factors > 1
  std::vector<std::vector<Rat>> lifts;  // one rational N-vector per factor

  Int order() const {
    Int o = 1;
    for (long f : factors) o *= f;
    return o;
  }
};

// gens: rational N-vectors; the group they generate in (Q/Z)^N.
TorsionGroup torsion_from_generators(int n, const std::vector<std::vector<Rat>>& gens);

// Index [Z^k : L] of the lattice L = {x : E x is integral}, for a rational
// k x k matrix E.  Used for radical computations of Q/Z-valued pairings.
Int integral_preimage_index(const std::vector<std::vector<Rat>>& e);

// Integer matrices as ring-Z Mat values.
Mat int_mat(const std::vector<std::vector<long>>& rows);

// Z-expansion of a matrix over O: each entry becomes the 2x2 integer
// matrix of multiplication on the Z-basis of the period lattice
// ({1, omega} for CM rings, two trivial copies for ring Z).
Mat expand_to_z(const Mat& m);

// Z-Gram matrix of the symplectic form on the expanded X-lattice,
// normalized so that it is unimodular (perfect on every torsion level).
// For CM rings this is Tr(lambda conj(u)^T J v) with lambda a generator
// of the inverse different; for ring Z it is J tensor the unit symplectic
// form on the period lattice.
Mat symplectic_gram_z(const BaseRing& ring, const Mat& j_form);

}  // namespace lag

#endif
