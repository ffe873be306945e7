#pragma once

// Test-only reference arithmetic on nested vectors. Shares nothing with
// spinv::Matrix except the scalar type.

#include <algorithm>
#include <numeric>
#include <vector>

#include "spinv/matrix.hpp"

namespace oracle {

using Rational = spinv::Rational;
using Rows = std::vector<std::vector<Rational>>;

inline Rows rows_of(const spinv::Matrix& m) {
  Rows r(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  return r;
}

inline Rows mul(const Rows& a, const Rows& b) {
  Rows c(a.size(), std::vector<Rational>(b.empty() ? 0 : b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < c[i].size(); ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < b.size(); ++k) s += a[i][k] * b[k][j];
      c[i][j] = s;
    }
  return c;
}

inline Rows mul(const Rows& a, const Rows& b, const Rows& c) { return mul(mul(a, b), c); }

inline Rows identity(std::size_t n) {
  Rows r(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

inline Rows transpose(const Rows& a) {
  Rows t(a.empty() ? 0 : a[0].size(), std::vector<Rational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

// Ω = [[0, I], [−I, 0]] written out entrywise.
inline Rows omega(std::size_t n) {
  Rows o(2 * n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    o[i][n + i] = 1;
    o[n + i][i] = -1;
  }
  return o;
}

inline Rows r_matrix(std::size_t n) {
  Rows r(2 * n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    r[i][i] = 1;
    r[n + i][n + i] = -1;
  }
  return r;
}

// Leibniz expansion over all permutations.
inline Rational det(const Rows& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// 2×2 inverse by the adjugate formula.
inline Rows inverse2(const Rows& a) {
  const Rational d = a[0][0] * a[1][1] - a[0][1] * a[1][0];
  return {{a[1][1] / d, -a[0][1] / d}, {-a[1][0] / d, a[0][0] / d}};
}

}  // namespace oracle
