#pragma once

// Test-only reference linear algebra. Deliberately naive and independent of
// sht::rref: dense rationals, right-to-left column sweep, first-nonzero pivot.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "sht/rational.hpp"

namespace oracle {

using Dense = std::vector<std::vector<sht::Rational>>;

inline std::size_t naive_rank(Dense a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t cc = cols; cc-- > 0 && r < rows;) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a[i][cc] != 0) { p = i; break; }
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][cc] == 0) continue;
      sht::Rational f = a[i][cc] / a[r][cc];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline sht::Rational cofactor_det(const Dense& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  sht::Rational det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Dense minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<sht::Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    sht::Rational term = m[0][j] * cofactor_det(minor);
    det += (j % 2 == 0) ? term : sht::Rational(-term);
  }
  return det;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) { out.push_back(cur); return; }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Largest k with a nonzero k x k minor, by exhaustive enumeration.
inline std::size_t minor_rank(const Dense& a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    for (const auto& r : rs)
      for (const auto& c : cs) {
        Dense m(k, std::vector<sht::Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a[r[i]][c[j]];
        if (cofactor_det(m) != 0) return k;
      }
  }
  return 0;
}

}  // namespace oracle
