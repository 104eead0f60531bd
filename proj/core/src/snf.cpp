#include "lagcorr/snf.hpp"

#include <algorithm>
#include <sstream>

namespace lag {

Mat Mat::identity(BaseRing ring, int n) {
  Mat m(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = QuadElem::one(ring);
  return m;
}

Mat Mat::from_rows(BaseRing ring, const std::vector<std::vector<QuadElem>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Mat m(ring, r, c);
  for (int i = 0; i < r; ++i) {
    LAG_CHECK(static_cast<int>(rows[i].size()) == c, "BadShape", "ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool Mat::is_integral() const {
  for (const QuadElem& x : e_)
    if (!x.is_integral()) return false;
  return true;
}

bool Mat::is_zero() const {
  for (const QuadElem& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Mat Mat::operator+(const Mat& o) const {
  LAG_CHECK(rows_ == o.rows_ && cols_ == o.cols_, "BadShape", "shape mismatch in +");
  Mat m = *this;
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
  return m;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator-() const {
  Mat m = *this;
  for (QuadElem& x : m.e_) x = -x;
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  LAG_CHECK(cols_ == o.rows_, "BadShape", "shape mismatch in *");
  Mat m(ring_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const QuadElem& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) m.at(i, j) += a * o.at(k, j);
    }
  return m;
}

Mat Mat::scaled(const QuadElem& s) const {
  Mat m = *this;
  for (QuadElem& x : m.e_) x = x * s;
  return m;
}

Mat Mat::scaled(const Rat& s) const {
  Mat m = *this;
  for (QuadElem& x : m.e_) x = x.scaled(s);
  return m;
}

Mat Mat::conj_transpose() const {
  Mat m(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j).conj();
  return m;
}

Mat Mat::transpose() const {
  Mat m(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Mat Mat::submatrix(int r0, int c0, int nrows, int ncols) const {
  Mat m(ring_, nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) m.at(i, j) = at(r0 + i, c0 + j);
  return m;
}

Mat Mat::select_rows(const std::vector<int>& idx) const {
  Mat m(ring_, static_cast<int>(idx.size()), cols_);
  for (size_t i = 0; i < idx.size(); ++i)
    for (int j = 0; j < cols_; ++j) m.at(static_cast<int>(i), j) = at(idx[i], j);
  return m;
}

Mat Mat::select_cols(const std::vector<int>& idx) const {
  Mat m(ring_, rows_, static_cast<int>(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (size_t j = 0; j < idx.size(); ++j) m.at(i, static_cast<int>(j)) = at(i, idx[j]);
  return m;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  LAG_CHECK(a.cols() == b.cols(), "BadShape", "vstack column mismatch");
  Mat m(a.ring(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
  return m;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
  LAG_CHECK(a.rows() == b.rows(), "BadShape", "hstack row mismatch");
  Mat m(a.ring(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

void Mat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void Mat::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void Mat::add_row_multiple(int i, int j, const QuadElem& f) {
  for (int c = 0; c < cols_; ++c) at(i, c) += f * at(j, c);
}

void Mat::add_col_multiple(int i, int j, const QuadElem& f) {
  for (int r = 0; r < rows_; ++r) at(r, i) += f * at(r, j);
}

void Mat::scale_row(int i, const QuadElem& u) {
  for (int c = 0; c < cols_; ++c) at(i, c) = u * at(i, c);
}

void Mat::scale_col(int i, const QuadElem& u) {
  for (int r = 0; r < rows_; ++r) at(r, i) = u * at(r, i);
}

Int Mat::denominator_lcm() const {
  Int l = 1;
  for (const QuadElem& x : e_) {
    Int d = lag::denominator_lcm(x);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << at(i, j).str() << (j + 1 < cols_ ? ", " : "");
    os << (i + 1 < rows_ ? ";\n" : "]");
  }
  return os.str();
}

int rank_K(const Mat& m) {
  Mat w = m;
  int rank = 0;
  for (int col = 0; col < w.cols() && rank < w.rows(); ++col) {
    int pivot = -1;
    for (int r = rank; r < w.rows(); ++r)
      if (!w.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    w.swap_rows(rank, pivot);
    for (int r = rank + 1; r < w.rows(); ++r) {
      if (w.at(r, col).is_zero()) continue;
      QuadElem f = w.at(r, col) / w.at(rank, col);
      w.add_row_multiple(r, rank, -f);
    }
    ++rank;
  }
  return rank;
}

QuadElem det_K(const Mat& m) {
  LAG_CHECK(m.rows() == m.cols(), "BadShape", "determinant of non-square matrix");
  Mat w = m;
  QuadElem det = QuadElem::one(m.ring());
  for (int col = 0; col < w.cols(); ++col) {
    int pivot = -1;
    for (int r = col; r < w.rows(); ++r)
      if (!w.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return QuadElem::zero(m.ring());
    if (pivot != col) {
      w.swap_rows(col, pivot);
      det = -det;
    }
    det = det * w.at(col, col);
    for (int r = col + 1; r < w.rows(); ++r) {
      if (w.at(r, col).is_zero()) continue;
      QuadElem f = w.at(r, col) / w.at(col, col);
      w.add_row_multiple(r, col, -f);
    }
  }
  return det;
}

Mat inverse_K(const Mat& m) {
  LAG_CHECK(m.rows() == m.cols(), "BadShape", "inverse of non-square matrix");
  int n = m.rows();
  Mat w = m;
  Mat inv = Mat::identity(m.ring(), n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!w.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    LAG_CHECK(pivot >= 0, "SingularMatrix", "matrix not invertible over K");
    w.swap_rows(col, pivot);
    inv.swap_rows(col, pivot);
    QuadElem p = w.at(col, col);
    for (int c = 0; c < n; ++c) {
      w.at(col, c) = w.at(col, c) / p;
      inv.at(col, c) = inv.at(col, c) / p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || w.at(r, col).is_zero()) continue;
      QuadElem f = w.at(r, col);
      w.add_row_multiple(r, col, -f);
      inv.add_row_multiple(r, col, -f);
    }
  }
  return inv;
}

Int module_index(const QuadElem& d) {
  LAG_CHECK(!d.is_zero(), "ZeroDivisor", "module index of (0)");
  Rat n = d.norm();
  if (!d.ring().is_cm()) {
    // |Z/(d)| = |d|
    LAG_CHECK(is_integer(d.a()), "NotIntegral", "module index needs an integral element");
    return abs(num(d.a()));
  }
  LAG_CHECK(is_integer(n), "NotIntegral", "module index needs an integral element");
  return num(n);
}

Mat SnfResult::diagonal(int rows, int cols) const {
  BaseRing ring = U.ring();
  Mat d(ring, rows, cols);
  for (size_t i = 0; i < divisors.size(); ++i) d.at(static_cast<int>(i), static_cast<int>(i)) = divisors[i];
  return d;
}

namespace {

// Position of the minimal-norm nonzero entry of w in the block [t.., t..],
// or {-1,-1} if the block is zero.  Minimal-norm pivoting bounds
// coefficient growth in the Euclidean reduction.
std::pair<int, int> min_norm_pivot(const Mat& w, int t) {
  std::pair<int, int> best{-1, -1};
  Rat best_norm = -1;
  for (int i = t; i < w.rows(); ++i)
    for (int j = t; j < w.cols(); ++j) {
      const QuadElem& x = w.at(i, j);
      if (x.is_zero()) continue;
      Rat n = x.norm();
      if (best_norm < 0 || n < best_norm) {
        best_norm = n;
        best = {i, j};
      }
    }
  return best;
}

}  // namespace

SnfResult smith_normal_form(const Mat& m) {
  LAG_CHECK(m.is_integral(), "NotIntegral", "Smith normal form needs integral entries");
  BaseRing ring = m.ring();
  SnfResult res;
  Mat w = m;
  res.U = Mat::identity(ring, m.rows());
  res.U_inv = Mat::identity(ring, m.rows());
  res.V = Mat::identity(ring, m.cols());
  res.V_inv = Mat::identity(ring, m.cols());

  // Elementary operations, mirrored on the transformation matrices.
  // Invariant: w = U * m * V at every step.
  auto row_swap = [&](int i, int j) {
    w.swap_rows(i, j);
    res.U.swap_rows(i, j);
    res.U_inv.swap_cols(i, j);
  };
  auto col_swap = [&](int i, int j) {
    w.swap_cols(i, j);
    res.V.swap_cols(i, j);
    res.V_inv.swap_rows(i, j);
  };
  auto row_add = [&](int i, int j, const QuadElem& f) {
    // row_i += f row_j ; inverse: col_j -= f col_i on U_inv
    w.add_row_multiple(i, j, f);
    res.U.add_row_multiple(i, j, f);
    res.U_inv.add_col_multiple(j, i, -f);
  };
  auto col_add = [&](int i, int j, const QuadElem& f) {
    w.add_col_multiple(i, j, f);
    res.V.add_col_multiple(i, j, f);
    res.V_inv.add_row_multiple(j, i, -f);
  };
  auto row_scale_unit = [&](int i, const QuadElem& u) {
    w.scale_row(i, u);
    res.U.scale_row(i, u);
    // inverse of unit u
    QuadElem uinv = QuadElem::one(ring) / u;
    res.U_inv.scale_col(i, uinv);
  };

  int t = 0;
  int bound = std::min(m.rows(), m.cols());
  while (t < bound) {
    auto [pi, pj] = min_norm_pivot(w, t);
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      // Clear the pivot column.
      for (int i = t + 1; i < w.rows(); ++i) {
        if (w.at(i, t).is_zero()) continue;
        QuadDivRem dr = quad_divrem(w.at(i, t), w.at(t, t));
        row_add(i, t, -dr.q);
        if (!w.at(i, t).is_zero()) {
          // Remainder has strictly smaller norm: promote it to pivot.
          row_swap(t, i);
          clean = false;
        }
      }
      if (!clean) continue;
      // Clear the pivot row.
      for (int j = t + 1; j < w.cols(); ++j) {
        if (w.at(t, j).is_zero()) continue;
        QuadDivRem dr = quad_divrem(w.at(t, j), w.at(t, t));
        col_add(j, t, -dr.q);
        if (!w.at(t, j).is_zero()) {
          col_swap(t, j);
          clean = false;
          break;  // column ops disturbed the pivot column; restart
        }
      }
      if (!clean) continue;
      // Divisibility chain: the pivot must divide the remaining block.
      for (int i = t + 1; i < w.rows() && clean; ++i)
        for (int j = t + 1; j < w.cols() && clean; ++j)
          if (!divides(w.at(t, t), w.at(i, j))) {
            row_add(t, i, QuadElem::one(ring));
            clean = false;
          }
    }
    ++t;
  }

  for (int i = 0; i < t; ++i) {
    QuadElem d = w.at(i, i);
    QuadElem c = canonical_associate(d);
    if (!(c == d)) {
      QuadElem u = c / d;  // a unit
      row_scale_unit(i, u);
    }
    res.divisors.push_back(w.at(i, i));
  }
  res.rank = t;
  return res;
}

Mat kernel_lattice(const Mat& m) {
  SnfResult s = smith_normal_form(m);
  std::vector<int> idx;
  for (int j = s.rank; j < m.cols(); ++j) idx.push_back(j);
  return s.V.select_cols(idx);
}

SaturationResult saturate(const Mat& b) {
  LAG_CHECK(rank_K(b) == b.cols(), "DependentColumns", "saturate needs independent columns");
  SnfResult s = smith_normal_form(b);
  // b = U_inv [diag; 0] V_inv: the saturation is spanned by the first
  // rank columns of U_inv.
  std::vector<int> idx;
  for (int j = 0; j < s.rank; ++j) idx.push_back(j);
  SaturationResult out{s.U_inv.select_cols(idx), 1};
  for (const QuadElem& d : s.divisors) out.index *= module_index(d);
  return out;
}

bool is_unimodular(const Mat& m) {
  if (m.rows() != m.cols() || !m.is_integral()) return false;
  QuadElem d = det_K(m);
  return d.is_integral() && d.norm() == 1;
}

}  // namespace lag
