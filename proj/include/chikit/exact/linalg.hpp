/**
 * @file linalg.hpp
 * @brief Exact Gaussian elimination over Q or Q(t,...).
 */
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "chikit/exact/ratfunc.hpp"

namespace chikit::linalg {

template <class T>
using Matrix = std::vector<std::vector<T>>;

inline bool is_zero(const BigRat& x) { return x == 0; }
inline bool is_zero(const RatFunc& x) { return x.is_zero(); }

/// In-place reduced row echelon form; returns the pivot column of each nonzero row.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  std::size_t rows = a.size(), cols = a[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    T inv = T(1) / a[r][c];
    for (auto& x : a[r]) x = x * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      T f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> a) {
  return rref(a).size();
}

/// Basis of {v : A v = 0}, one vector per free column, in RREF-normalized form.
template <class T>
Matrix<T> kernel_basis(Matrix<T> a, std::size_t cols) {
  auto pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix<T> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(cols, T(0));
    v[f] = T(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = T(0) - a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some x with A x = b, or nullopt.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b, std::size_t cols) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: row count mismatch");
  Matrix<T> aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    if (aug[i].size() != cols) throw std::invalid_argument("solve: ragged matrix");
    aug[i].push_back(b[i]);
  }
  auto pivots = rref(aug);
  std::vector<T> x(cols, T(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols) return std::nullopt;
    x[pivots[i]] = aug[i][cols];
  }
  return x;
}

}  // namespace chikit::linalg
