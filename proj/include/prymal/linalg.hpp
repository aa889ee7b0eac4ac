#pragma once

// Dense exact linear algebra over the rationals: row reduction, rank,
// determinant and solving with a uniqueness verdict.

#include "prymal/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace prymal {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
      }
    return m;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

namespace detail {

inline std::size_t numerator_bits(const Rational& q) {
  const Integer n = boost::multiprecision::numerator(q);
  return n == 0 ? 0 : boost::multiprecision::msb(boost::multiprecision::abs(n)) + 1;
}

}  // namespace detail

/// In-place reduction to reduced row echelon form. Returns the pivot columns.
/// Only the first `pivot_cols` columns are eligible as pivots (the rest ride
/// along, e.g. an augmented right-hand side). Pivots are chosen by largest
/// numerator magnitude within the column.
inline std::vector<std::size_t> row_reduce(Matrix& m, std::optional<std::size_t> pivot_cols = {}) {
  const std::size_t ncols = pivot_cols.value_or(m.cols());
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    std::size_t best_bits = 0;
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      const std::size_t bits = detail::numerator_bits(m(r, col));
      if (best == m.rows() || bits > best_bits) {
        best = r;
        best_bits = bits;
      }
    }
    if (best == m.rows()) continue;
    if (best != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(best, c), m(row, c));
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c)
      if (m(row, c) != 0) m(row, c) *= inv;
    std::vector<std::size_t> nz;
    for (std::size_t c = col; c < m.cols(); ++c)
      if (m(row, c) != 0) nz.push_back(c);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c : nz) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(Matrix m) { return row_reduce(m).size(); }

inline Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col; r < n; ++r)
      if (m(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(piv, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    const Rational inv = Rational(1) / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Rational f = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

class LinearSystemError : public std::runtime_error {
 public:
  LinearSystemError(const std::string& what, std::size_t rank, std::size_t unknowns)
      : std::runtime_error(what + " (rank " + std::to_string(rank) + " of " +
                           std::to_string(unknowns) + " unknowns)"),
        rank_(rank),
        unknowns_(unknowns) {}
  std::size_t rank() const { return rank_; }
  std::size_t unknowns() const { return unknowns_; }

 private:
  std::size_t rank_;
  std::size_t unknowns_;
};

struct Solution {
  std::vector<Rational> values;  // free variables set to zero when not unique
  std::size_t rank = 0;
  bool unique = false;
};

/// Solve A x = b exactly. Throws LinearSystemError when inconsistent.
inline Solution solve(const Matrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto pivots = row_reduce(aug, a.cols());
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (aug(r, a.cols()) != 0) throw LinearSystemError("inconsistent linear system", pivots.size(), a.cols());
  Solution sol;
  sol.values.assign(a.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) sol.values[pivots[i]] = aug(i, a.cols());
  sol.rank = pivots.size();
  sol.unique = sol.rank == a.cols();
  return sol;
}

/// Solve and insist on a unique solution.
inline std::vector<Rational> solve_unique(const Matrix& a, const std::vector<Rational>& b) {
  Solution s = solve(a, b);
  if (!s.unique) throw LinearSystemError("underdetermined linear system", s.rank, a.cols());
  return std::move(s.values);
}

}  // namespace prymal
