#pragma once

#include "laurent.hpp"
#include "ratfunc.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace schroederlab {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("Matrix: entry count does not match shape");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  /// Drops row r and column c.
  Matrix minor(std::size_t r, std::size_t c) const {
    Matrix m(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
        if (j == c) continue;
        m(mi, mj++) = (*this)(i, j);
      }
      ++mi;
    }
    return m;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

/// Fraction-free (Bareiss) elimination over the Laurent ring. Pivots are
/// chosen by fewest terms to keep intermediate entries small.
inline LaurentPoly det(Matrix<LaurentPoly> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  LaurentPoly prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i)
      if (!m(i, k).is_zero() && (best == n || m(i, k).size() < m(best, k).size())) best = i;
    if (best == n) return 0;
    if (best != k) {
      m.swap_rows(best, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        if (k > 0) {
          auto q = exact_div(t, prev);
          if (!q) throw std::logic_error("det: Bareiss step produced a non-exact quotient");
          t = std::move(*q);
        }
        m(i, j) = std::move(t);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  LaurentPoly d = m(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

/// Determinant over RatFunc: each column is scaled by the product of its
/// distinct denominators, then the polynomial determinant is divided back.
inline RatFunc det(const Matrix<RatFunc>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix is not square");
  const std::size_t n = m.rows();
  Matrix<LaurentPoly> p(n, n);
  LaurentPoly scale = 1;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<LaurentPoly> dens;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& d = m(i, j).den();
      if (d.is_one()) continue;
      bool seen = false;
      for (const auto& e : dens) seen = seen || (e == d);
      if (!seen) dens.push_back(d);
    }
    LaurentPoly col = 1;
    for (const auto& d : dens) col *= d;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& e = m(i, j);
      if (e.den().is_one()) {
        p(i, j) = e.num() * col;
      } else {
        auto q = exact_div(col, e.den());
        p(i, j) = e.num() * *q;
      }
    }
    scale *= col;
  }
  return RatFunc(det(std::move(p)), scale);
}

/// Solves M x = rhs by Cramer's rule through the adjugate.
inline std::vector<RatFunc> solve_linear(const Matrix<RatFunc>& m, const std::vector<RatFunc>& rhs) {
  if (m.rows() != m.cols()) throw std::invalid_argument("solve_linear: matrix is not square");
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve_linear: rhs length mismatch");
  const std::size_t n = m.rows();
  const RatFunc d = det(m);
  if (d.is_zero()) throw std::domain_error("solve_linear: singular system");
  if (n == 0) return {};
  // x_j = sum_i (-1)^{i+j} det(minor(i, j)) rhs_i / det
  std::vector<RatFunc> x(n);
  for (std::size_t j = 0; j < n; ++j) {
    RatFunc acc;
    for (std::size_t i = 0; i < n; ++i) {
      if (rhs[i].is_zero()) continue;
      RatFunc c = n == 1 ? RatFunc(1) : det(m.minor(i, j));
      if ((i + j) % 2) c = -c;
      acc += c * rhs[i];
    }
    x[j] = acc / d;
  }
  return x;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& m, const std::vector<T>& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<T> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace schroederlab
