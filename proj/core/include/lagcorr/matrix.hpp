#ifndef LAGCORR_MATRIX_HPP
#define LAGCORR_MATRIX_HPP

#include <functional>
#include <string>
#include <vector>

#include "lagcorr/errors.hpp"
#include "lagcorr/quad.hpp"

namespace lag {

// Dense matrix over QuadElem (entries in K; lattice algorithms require
// integral entries and check for them).  Value semantics throughout.
class Mat {
public:
  Mat() : rows_(0), cols_(0), ring_{0} {}
  Mat(BaseRing ring, int rows, int cols)
      : rows_(rows), cols_(cols), ring_(ring), e_(static_cast<size_t>(rows) * cols, QuadElem::zero(ring)) {}

  static Mat identity(BaseRing ring, int n);
  static Mat zero(BaseRing ring, int rows, int cols) { return Mat(ring, rows, cols); }
  static Mat from_rows(BaseRing ring, const std::vector<std::vector<QuadElem>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const BaseRing& ring() const { return ring_; }

  const QuadElem& at(int r, int c) const { return e_[idx(r, c)]; }
  QuadElem& at(int r, int c) { return e_[idx(r, c)]; }

  bool is_integral() const;
  bool is_zero() const;

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator-() const;
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

  Mat scaled(const QuadElem& s) const;
  Mat scaled(const Rat& s) const;

  // Conjugate transpose (plain transpose for ring Z): the Rosati dual.
  Mat conj_transpose() const;
  Mat transpose() const;

  Mat submatrix(int r0, int c0, int nrows, int ncols) const;
  // Rows selected by index list.
  Mat select_rows(const std::vector<int>& idx) const;
  Mat select_cols(const std::vector<int>& idx) const;
  // [A; B] and [A, B]
  static Mat vstack(const Mat& a, const Mat& b);
  static Mat hstack(const Mat& a, const Mat& b);

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  // row_i += f * row_j, col_i += f * col_j
  void add_row_multiple(int i, int j, const QuadElem& f);
  void add_col_multiple(int i, int j, const QuadElem& f);
  void scale_row(int i, const QuadElem& u);
  void scale_col(int i, const QuadElem& u);

  // Least positive integer N with N*M integral.
  Int denominator_lcm() const;

  std::string str() const;

private:
  size_t idx(int r, int c) const {
    LAG_ASSERT(r >= 0 && r < rows_ && c >= 0 && c < cols_, "MatIndex", "index out of range");
    return static_cast<size_t>(r) * cols_ + c;
  }
  int rows_, cols_;
  BaseRing ring_;
  std::vector<QuadElem> e_;
};

// Field operations over K (exact).
int rank_K(const Mat& m);
QuadElem det_K(const Mat& m);
// Inverse over K; throws SingularMatrix if not invertible.
Mat inverse_K(const Mat& m);

}  // namespace lag

#endif
