#pragma once

// Plain dense Gauss-Jordan over mpq_class. Deliberately shares no code with the
// library's sparse elimination so test comparisons are independent.

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Dense = std::vector<std::vector<Q>>;

struct Reduced {
  Dense rows;                 // nonzero rows of the RREF
  std::vector<std::size_t> pivots;
};

inline Reduced rref(Dense m, std::size_t cols) {
  std::size_t r = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Q inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  m.resize(r);
  return {std::move(m), std::move(piv)};
}

inline std::size_t rank(const Dense& m, std::size_t cols) { return rref(m, cols).pivots.size(); }

// Kernel basis in RREF, pivots normalized to 1.
inline Dense nullspace(const Dense& m, std::size_t cols) {
  Reduced red = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  Dense basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Q> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = -red.rows[i][f];
    basis.push_back(std::move(v));
  }
  return rref(basis, cols).rows;
}

}  // namespace oracle
