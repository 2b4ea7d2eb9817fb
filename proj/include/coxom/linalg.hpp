#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coxom/error.hpp"
#include "coxom/scalars/scalars.hpp"

namespace coxom {

template <class F>
class Matrix {
 public:
  using value_type = F;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(Rational(0))) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(Rational(1));
    return m;
  }

  // Columns given as vectors of equal length.
  static Matrix from_columns(const std::vector<std::vector<F>>& cols) {
    if (cols.empty()) return {};
    Matrix m(cols.front().size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != m.rows_) throw Error("Matrix::from_columns: ragged columns");
      for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("Matrix: dimension mismatch in product");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
      }
    return p;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

// Division-free Laplace expansion over column subsets, O(2^n n). Works in
// any commutative ring; used directly for intervals and as a test oracle.
template <class F>
F det_expansion(const Matrix<F>& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw Error("det: matrix is not square");
  if (n == 0) return F(Rational(1));
  if (n > 20) throw Error("det_expansion: rank too large");
  std::vector<F> dp(std::size_t{1} << n, F(Rational(0)));
  dp[0] = F(Rational(1));
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
    F acc(Rational(0));
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1U << c))) continue;
      const F& sub = dp[mask & ~(1U << c)];
      if (is_zero(sub) || is_zero(a(row, c))) continue;
      // sign from the columns of the mask that lie to the right of c
      int above = std::popcount(mask >> (c + 1));
      F term = a(row, c) * sub;
      if (above % 2 == 0) acc += term;
      else acc -= term;
    }
    dp[mask] = std::move(acc);
  }
  return dp.back();
}

// Fraction-free Bareiss elimination; every division is exact in the ring.
template <class F>
F det_bareiss(Matrix<F> a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw Error("det: matrix is not square");
  if (n == 0) return F(Rational(1));
  F prev(Rational(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(a(p, k))) ++p;
      if (p == n) return F(Rational(0));
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        F num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = num / prev;
      }
      a(i, k) = F(Rational(0));
    }
    prev = a(k, k);
  }
  F d = a(n - 1, n - 1);
  return negate ? -d : d;
}

template <class F>
F det(const Matrix<F>& a) {
  if constexpr (kExactTower<F>) return det_bareiss(a);
  else return det_expansion(a);
}

// Rank over the fraction field (exact towers only).
template <class F>
std::size_t rank(Matrix<F> a) {
  static_assert(kExactTower<F>, "rank needs exact zero tests");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  F prev(Rational(1));
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a(p, c))) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(p, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        F num = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        a(i, j) = num / prev;
      }
      a(i, c) = F(Rational(0));
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

}  // namespace coxom
