#pragma once

#include <cstddef>
#include <vector>

#include "crossrank/matrix.hpp"

namespace crossrank::oracle {

/// Determinant by cofactor expansion along the first row.
inline Scalar cofactor_det(const ScalarMatrix& m, const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols) {
  const Field f = m(0, 0).field();
  if (rows.empty()) return Scalar::one(f);
  Scalar sum = Scalar::zero(f);
  std::vector<std::size_t> rest_rows(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Scalar& e = m(rows[0], cols[k]);
    if (e.is_zero()) continue;
    std::vector<std::size_t> rest_cols;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest_cols.push_back(cols[j]);
    Scalar term = e * cofactor_det(m, rest_rows, rest_cols);
    sum = (k % 2 == 0) ? sum + term : sum - term;
  }
  return sum;
}

inline void subsets(std::size_t n, std::size_t r, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == r) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, r, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Rank as the size of the largest nonvanishing square minor.
inline std::size_t minor_rank(const ScalarMatrix& m) {
  if (m.empty()) return 0;
  for (std::size_t r = std::min(m.rows(), m.cols()); r > 0; --r) {
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    std::vector<std::size_t> cur;
    subsets(m.rows(), r, 0, cur, row_sets);
    subsets(m.cols(), r, 0, cur, col_sets);
    for (const auto& rs : row_sets)
      for (const auto& cs : col_sets)
        if (!cofactor_det(m, rs, cs).is_zero()) return r;
  }
  return 0;
}

}  // namespace crossrank::oracle
