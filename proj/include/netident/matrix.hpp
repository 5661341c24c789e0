#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace netident {

/// Thrown when a pivot falls below the singularity tolerance during
/// factorization. Carries the magnitude of the offending pivot.
class SingularMatrix : public std::runtime_error {
 public:
  explicit SingularMatrix(double smallest_pivot)
      : std::runtime_error("matrix is singular to working tolerance (pivot " +
                           std::to_string(smallest_pivot) + ")"),
        smallest_pivot_(smallest_pivot) {}

  double smallest_pivot() const { return smallest_pivot_; }

 private:
  double smallest_pivot_;
};

/// Thrown by the row-system solver when the coefficient matrix does not
/// have full row rank.
class RankDeficient : public std::runtime_error {
 public:
  RankDeficient(int achieved, int required)
      : std::runtime_error("rank-deficient system: achieved rank " +
                           std::to_string(achieved) + " of " +
                           std::to_string(required)),
        achieved_(achieved),
        required_(required) {}

  int achieved_rank() const { return achieved_; }
  int required_rank() const { return required_; }

 private:
  int achieved_;
  int required_;
};

/// Pivot acceptance policy for numerical rank decisions. A pivot counts
/// iff |pivot| > rel_tol * max_abs_entry * max(rows, cols), where
/// max_abs_entry is taken from the matrix before elimination starts.
struct RankTolerance {
  double rel_tol = 1e-9;

  double threshold(double max_abs_entry, int rows, int cols) const {
    return rel_tol * max_abs_entry * static_cast<double>(std::max(rows, cols));
  }
};

/// Dense row-major matrix of doubles.
class RealMatrix {
 public:
  RealMatrix() = default;

  RealMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }

  static RealMatrix identity(int n) {
    RealMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static RealMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    RealMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != c)
        throw std::invalid_argument("ragged initializer");
      int j = 0;
      for (double v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  const std::vector<double>& data() const { return data_; }

  double max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  bool all_finite() const {
    for (double v : data_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  RealMatrix transposed() const {
    RealMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in product");
    RealMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const double aik = a(i, k);
        if (aik == 0.0) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend RealMatrix operator-(const RealMatrix& a, const RealMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("dimension mismatch in difference");
    RealMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

inline double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
  return (a - b).max_abs();
}

namespace detail {

// LU factorization with partial pivoting, in place. Returns the pivot
// permutation and sign; pivots end up on the diagonal of `a`.
struct LuResult {
  std::vector<int> perm;
  int sign = 1;
  double smallest_pivot = 0.0;
  bool singular = false;
};

inline LuResult lu_factor(RealMatrix& a) {
  const int n = a.rows();
  LuResult lu;
  lu.perm.resize(n);
  for (int i = 0; i < n; ++i) lu.perm[i] = i;
  lu.smallest_pivot = std::numeric_limits<double>::infinity();

  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(a(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::abs(a(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(lu.perm[k], lu.perm[piv]);
      lu.sign = -lu.sign;
    }
    lu.smallest_pivot = std::min(lu.smallest_pivot, best);
    if (best == 0.0) {
      lu.singular = true;
      return lu;
    }
    const double inv = 1.0 / a(k, k);
    for (int i = k + 1; i < n; ++i) {
      const double f = a(i, k) * inv;
      a(i, k) = f;
      for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return lu;
}

// Solve A x = b for one right-hand side given the factorization of A.
inline void lu_solve_inplace(const RealMatrix& lu, const LuResult& res,
                             const std::vector<double>& b, std::vector<double>& x) {
  const int n = lu.rows();
  x.resize(n);
  for (int i = 0; i < n; ++i) x[i] = b[res.perm[i]];
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) x[i] -= lu(i, j) * x[j];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) x[i] -= lu(i, j) * x[j];
    x[i] /= lu(i, i);
  }
}

}  // namespace detail

/// Determinant via LU with partial pivoting.
inline double determinant(const RealMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  RealMatrix a = m;
  const auto lu = detail::lu_factor(a);
  if (lu.singular) return 0.0;
  double det = lu.sign;
  for (int i = 0; i < m.rows(); ++i) det *= a(i, i);
  return det;
}

/// Inverse via LU with partial pivoting. Throws SingularMatrix when a pivot
/// falls below the tolerance threshold.
inline RealMatrix invert(const RealMatrix& m, RankTolerance tol = {}) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const int n = m.rows();
  RealMatrix a = m;
  const auto lu = detail::lu_factor(a);
  const double tau = tol.threshold(m.max_abs(), n, n);
  if (lu.singular || lu.smallest_pivot <= tau) throw SingularMatrix(lu.smallest_pivot);

  RealMatrix inv(n, n);
  std::vector<double> b(n, 0.0), x;
  for (int j = 0; j < n; ++j) {
    std::fill(b.begin(), b.end(), 0.0);
    b[j] = 1.0;
    detail::lu_solve_inplace(a, lu, b, x);
    for (int i = 0; i < n; ++i) inv(i, j) = x[i];
  }
  return inv;
}

/// Numerical rank by row-echelon reduction with partial pivoting. The pivot
/// threshold is fixed from the input matrix, so the result is invariant
/// under uniform scaling.
inline int numerical_rank(const RealMatrix& m, RankTolerance tol = {}) {
  RealMatrix a = m;
  const int rows = a.rows();
  const int cols = a.cols();
  const double tau = tol.threshold(m.max_abs(), rows, cols);

  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = rank;
    double best = std::abs(a(rank, col));
    for (int i = rank + 1; i < rows; ++i) {
      const double v = std::abs(a(i, col));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best <= tau) continue;
    if (piv != rank)
      for (int j = col; j < cols; ++j) std::swap(a(rank, j), a(piv, j));
    const double inv = 1.0 / a(rank, col);
    for (int i = rank + 1; i < rows; ++i) {
      const double f = a(i, col) * inv;
      for (int j = col; j < cols; ++j) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

/// Solve X * A = B in the least-squares sense, row system by row system.
/// A is m x q, B is p x q, the result X is p x m. Requires A to have full
/// row rank; throws RankDeficient otherwise. Exact when the system is
/// consistent.
inline RealMatrix solve_xa_eq_b(const RealMatrix& a, const RealMatrix& b,
                                RankTolerance tol = {}) {
  if (a.cols() != b.cols())
    throw std::invalid_argument("column mismatch between coefficient and right-hand side");
  const int m = a.rows();
  const int rank = numerical_rank(a, tol);
  if (rank < m) throw RankDeficient(rank, m);

  // Normal equations of the transposed system: (A A^T) X^T = A B^T.
  const RealMatrix at = a.transposed();
  RealMatrix gram = a * at;
  const auto lu_input_scale = gram.max_abs();
  auto lu = detail::lu_factor(gram);
  if (lu.singular || lu.smallest_pivot <= tol.threshold(lu_input_scale, m, m))
    throw SingularMatrix(lu.smallest_pivot);

  const RealMatrix rhs = a * b.transposed();  // m x p
  RealMatrix x(b.rows(), m);
  std::vector<double> col(m), sol;
  for (int p = 0; p < b.rows(); ++p) {
    for (int i = 0; i < m; ++i) col[i] = rhs(i, p);
    detail::lu_solve_inplace(gram, lu, col, sol);
    for (int i = 0; i < m; ++i) x(p, i) = sol[i];
  }
  return x;
}

}  // namespace netident
