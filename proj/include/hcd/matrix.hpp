#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hcd/errors.hpp"

namespace hcd {

/// Dense row-major matrix over an exact field (Rational, GaussianRational).
template <class Scalar>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  /// Appends the rows of `below` (column counts must agree).
  Matrix vstack(const Matrix& below) const {
    if (below.cols_ != cols_) throw InvalidInput("vstack: column count mismatch");
    Matrix out(rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + data_.size());
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

template <class Scalar>
struct RowEchelon {
  Matrix<Scalar> reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
template <class Scalar>
RowEchelon<Scalar> row_echelon(Matrix<Scalar> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(row, p);
    const Scalar inv = Scalar(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class Scalar>
std::size_t rank(const Matrix<Scalar>& m) {
  return row_echelon(m).pivot_columns.size();
}

/// Basis of the right kernel, one vector per free column in increasing column order.
/// Each basis vector has coordinate 1 at its free column.
template <class Scalar>
std::vector<std::vector<Scalar>> nullspace(const Matrix<Scalar>& m) {
  const auto [rref, pivots] = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar(0));
    v[free] = Scalar(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rref(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hcd
