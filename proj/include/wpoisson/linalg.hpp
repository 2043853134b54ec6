#pragma once

// Exact linear algebra.  Dense matrices over any coefficient field, plus a
// sparse fraction-free integer elimination used for ranks over Q.

#include "wpoisson/field.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace wpoisson::linalg {

template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  friend Matrix operator*(const Matrix& p, const Matrix& q) {
    if (p.cols_ != q.rows_) throw ConfigurationError("matrix shapes do not compose");
    Matrix r(p.rows_, q.cols_);
    for (std::size_t i = 0; i < p.rows_; ++i) {
      for (std::size_t k = 0; k < p.cols_; ++k) {
        if (is_zero(p(i, k))) continue;
        for (std::size_t j = 0; j < q.cols_; ++j) {
          if (!is_zero(q(k, j))) r(i, j) += p(i, k) * q(k, j);
        }
      }
    }
    return r;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    if (v.size() != cols_) throw ConfigurationError("vector length does not match matrix");
    std::vector<K> r(rows_, K(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!is_zero((*this)(i, j)) && !is_zero(v[j])) r[i] += (*this)(i, j) * v[j];
      }
    }
    return r;
  }

  bool is_zero_matrix() const {
    for (const auto& e : data_) {
      if (!is_zero(e)) return false;
    }
    return true;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> data_;
};

/// One row of an integer matrix: (column, nonzero value), columns increasing.
using SparseRow = std::vector<std::pair<std::uint32_t, Integer>>;

struct SparseIntMatrix {
  std::size_t cols = 0;
  std::vector<SparseRow> rows;
};

enum class Execution { serial, parallel };

/// Rank of an integer matrix by fraction-free sparse elimination.
std::size_t sparse_rank(SparseIntMatrix m, Execution ex = Execution::serial);

/// Row i scaled by the lcm of its denominators.
SparseIntMatrix to_sparse(const Matrix<Rational>& m);
/// Appends a rational row (scaled to integers) to `m`.
void append_row(SparseIntMatrix& m, std::vector<std::pair<std::uint32_t, Rational>> row);

namespace detail {

// Reduced row echelon form in place; returns pivot columns.
template <class K>
std::vector<std::size_t> rref(Matrix<K>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const K inv = inverse(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (!is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const K f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!is_zero(m(r, j))) m(i, j) = m(i, j) - f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

template <class K>
std::size_t rank(const Matrix<K>& m) {
  Matrix<K> work = m;
  return detail::rref(work).size();
}

template <>
inline std::size_t rank(const Matrix<Rational>& m) {
  return sparse_rank(to_sparse(m));
}

/// Basis of {v : m v = 0}.
template <class K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& m) {
  Matrix<K> work = m;
  const auto pivots = detail::rref(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(m.cols(), K(0));
    v[free] = K(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Coefficients w with m w = v, if any.
template <class K>
std::optional<std::vector<K>> in_column_span(const Matrix<K>& m, const std::vector<K>& v) {
  if (v.size() != m.rows()) throw ConfigurationError("vector length does not match matrix rows");
  Matrix<K> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = v[i];
  }
  const auto pivots = detail::rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<K> w(m.cols(), K(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) w[pivots[r]] = aug(r, m.cols());
  return w;
}

}  // namespace wpoisson::linalg
