#ifndef LAGCORR_SNF_HPP
#define LAGCORR_SNF_HPP

#include <vector>

#include "lagcorr/matrix.hpp"

namespace lag {

// Smith normal form over the Euclidean order O: U * M * V is diagonal
// with divisors d_1 | d_2 | ... | d_r followed by zeros; U, V unimodular.
// Divisors are normalized to their canonical associates.
struct SnfResult {
  Mat U, V;            // unimodular
  Mat U_inv, V_inv;    // exact inverses, maintained during reduction
  std::vector<QuadElem> divisors;  // nonzero diagonal entries, r of them
  int rank = 0;

  Mat diagonal(int rows, int cols) const;  // diag(divisors) padded with zeros
};

SnfResult smith_normal_form(const Mat& m);

// Basis of the saturated kernel {x : Mx = 0} as matrix columns; the span
// is a direct summand of O^cols.
Mat kernel_lattice(const Mat& m);

// Saturation of the column span of B (columns independent over K).
// Returns the basis of (span tensor K) intersect O^rows and the finite
// module index [saturation : span].
struct SaturationResult {
  Mat basis;
  Int index;
};
SaturationResult saturate(const Mat& b);

// |O / (d)|: the module index of the principal ideal (d).
Int module_index(const QuadElem& d);

bool is_unimodular(const Mat& m);

}  // namespace lag

#endif
