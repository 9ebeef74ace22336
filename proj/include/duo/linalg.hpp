#pragma once

// Dense exact linear algebra over Q: row reduction, inverse, kernel, solve.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "duo/rational.hpp"

namespace duo::linalg {

using Vec = std::vector<Rational>;

struct Dense {
  std::size_t rows = 0, cols = 0;
  std::vector<Rational> a;  // row-major

  Dense() = default;
  Dense(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  Rational& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static Dense identity(std::size_t n) {
    Dense d(n, n);
    for (std::size_t i = 0; i < n; ++i) d.at(i, i) = 1;
    return d;
  }
  bool operator==(const Dense& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

inline Dense mul(const Dense& x, const Dense& y) {
  Dense r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const Rational& v = x.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

inline Dense transpose(const Dense& x) {
  Dense r(x.cols, x.rows);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

// In-place reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(Dense& m) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t s = r;
    while (s < m.rows && m.at(s, c) == 0) ++s;
    if (s == m.rows) continue;
    if (s != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(s, j), m.at(r, j));
    Rational inv = 1 / m.at(r, c);
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rational f = m.at(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

inline std::size_t rank(Dense m) { return rref(m).size(); }

// Basis of {x : m x = 0}.
inline std::vector<Vec> kernel(Dense m) {
  auto piv = rref(m);
  std::vector<char> is_piv(m.cols, 0);
  for (auto c : piv) is_piv[c] = 1;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    Vec x(m.cols);
    x[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = -m.at(i, f);
    out.push_back(std::move(x));
  }
  return out;
}

inline std::optional<Dense> inverse(const Dense& m) {
  if (m.rows != m.cols) return std::nullopt;
  const std::size_t n = m.rows;
  Dense aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  Dense r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
  return r;
}

// All solutions of m x = b: a particular solution and a kernel basis, or none.
struct Solution {
  Vec particular;
  std::vector<Vec> kernel;
};

inline std::optional<Solution> solve(const Dense& m, const Vec& b) {
  Dense aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
  Solution s;
  s.particular.assign(m.cols, Rational(0));
  for (std::size_t i = 0; i < piv.size(); ++i) s.particular[piv[i]] = aug.at(i, m.cols);
  s.kernel = kernel(m);
  return s;
}

}  // namespace duo::linalg
