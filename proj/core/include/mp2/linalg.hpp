#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace mp2 {

// Dense exact linear algebra over a field type F supporting
// +,-,*,/, unary -, ==, construction from int, and is_zero().
template <class F>
using Mat = std::vector<std::vector<F>>;

template <class F>
bool lin_is_zero(const F& x) {
  return x == F(0);
}

template <class F>
Mat<F> mat_identity(std::size_t n) {
  Mat<F> m(n, std::vector<F>(n, F(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = F(1);
  return m;
}

template <class F>
Mat<F> mat_mul(const Mat<F>& a, const Mat<F>& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat<F> c(n, std::vector<F>(m, F(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (lin_is_zero(a[i][t])) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] = c[i][j] + a[i][t] * b[t][j];
    }
  return c;
}

template <class F>
Mat<F> mat_add(const Mat<F>& a, const Mat<F>& b) {
  Mat<F> c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] = a[i][j] + b[i][j];
  return c;
}

template <class F>
Mat<F> mat_scale(const Mat<F>& a, const F& s) {
  Mat<F> c = a;
  for (auto& row : c)
    for (auto& x : row) x = x * s;
  return c;
}

template <class F>
Mat<F> mat_sub(const Mat<F>& a, const Mat<F>& b) {
  return mat_add(a, mat_scale(b, F(-1)));
}

template <class F>
bool mat_is_zero(const Mat<F>& a) {
  for (auto& row : a)
    for (auto& x : row)
      if (!lin_is_zero(x)) return false;
  return true;
}

template <class F>
std::vector<F> mat_apply(const Mat<F>& a, const std::vector<F>& v) {
  std::vector<F> out(a.size(), F(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] = out[i] + a[i][j] * v[j];
  return out;
}

template <class F>
F mat_trace(const Mat<F>& a) {
  F t(0);
  for (std::size_t i = 0; i < a.size(); ++i) t = t + a[i][i];
  return t;
}

// In-place reduced row echelon form; returns pivot column indices.
template <class F>
std::vector<std::size_t> rref(Mat<F>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && lin_is_zero(m[sel][c])) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    F inv = F(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || lin_is_zero(m[i][c])) continue;
      F f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t mat_rank(Mat<F> m) {
  return rref(m).size();
}

// Basis of the right kernel of m.
template <class F>
std::vector<std::vector<F>> kernel_basis(Mat<F> m) {
  if (m.empty()) return {};
  std::size_t cols = m[0].size();
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<F> v(cols, F(0));
    v[free_c] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free_c];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves A x = b requiring consistency of every row; nullopt if inconsistent.
// The solution is unique only when A has full column rank (checked by caller
// when it matters).
template <class F>
std::optional<std::vector<F>> solve_exact(const Mat<F>& a, const std::vector<F>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_exact: size mismatch");
  if (a.empty()) return std::vector<F>{};
  std::size_t cols = a[0].size();
  Mat<F> aug = a;
  for (std::size_t i = 0; i < a.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // row (0..0|1)
  std::vector<F> x(cols, F(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

template <class F>
std::optional<Mat<F>> mat_inverse(const Mat<F>& a) {
  std::size_t n = a.size();
  Mat<F> aug = a;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? F(1) : F(0));
  }
  auto pivots = rref(aug);
  if (pivots.size() != n) return std::nullopt;
  Mat<F> inv(n, std::vector<F>(n, F(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace mp2
