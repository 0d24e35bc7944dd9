#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "maxent/errors.hpp"

namespace maxent {

/// Dense row-major matrix over an exact ring.
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<R> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DomainError("matrix data size mismatch");
  }
  /// Row-list construction, e.g. Matrix<R>({{1, 2}, {3, 4}}).
  Matrix(std::initializer_list<std::initializer_list<R>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DomainError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<R>& data() const { return data_; }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const R&>()))> {
    using T = decltype(f(std::declval<const R&>()));
    std::vector<T> out;
    out.reserve(data_.size());
    for (const auto& x : data_) out.push_back(f(x));
    return Matrix<T>(rows_, cols_, std::move(out));
  }

  Matrix conjugate_transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = conj((*this)(i, j));
    return t;
  }

  R trace() const {
    R acc{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) acc += (*this)(i, i);
    return acc;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix shape mismatch");
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

/// Determinant by Bareiss fraction-free elimination. Every division in the
/// scheme is exact in the integral domain R (exact_div(R, R) must exist).
/// Rows are swapped to avoid zero pivots.
template <class R>
R bareiss_det(Matrix<R> m) {
  if (!m.is_square() || m.rows() == 0) throw DomainError("bareiss_det needs a non-empty square matrix");
  const std::size_t n = m.rows();
  R prev_pivot(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(m(swap_row, k))) ++swap_row;
      if (swap_row == n) return R{};
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = exact_div(num, prev_pivot);
      }
      m(i, k) = R{};
    }
    prev_pivot = m(k, k);
  }
  R det = m(n - 1, n - 1);
  return negate ? -det : det;
}

/// Hankel matrix H with H(i, j) = s[offset + i + j], size k x k.
template <class R>
Matrix<R> hankel(const std::vector<R>& s, std::size_t k, std::size_t offset = 0) {
  if (offset + 2 * k - 1 > s.size()) throw DomainError("not enough terms for Hankel matrix");
  Matrix<R> h(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) h(i, j) = s[offset + i + j];
  return h;
}

}  // namespace maxent
