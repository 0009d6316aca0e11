/**
 * Copyright 2026, the qmv authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

/**
 * @file    linsolve.hpp
 * @brief   Exact rational linear systems
 */

#pragma once

#include <vector>

#include "qmv/core.hpp"

namespace qmv {

struct LinearSolution {
  std::vector<Rational> x; // one particular solution (free variables set to 0)
  size_t rank = 0;
  size_t unknowns = 0;
  bool consistent = false;
  bool unique() const { return consistent && rank == unknowns; }
};

// Gauss-Jordan elimination over Q. Rows are equations, a[i] has one entry per
// unknown.
inline LinearSolution solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  LinearSolution s;
  const size_t m = a.size();
  s.unknowns = m ? a[0].size() : 0;
  const size_t nv = s.unknowns;
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < nv && row < m; col++) {
    size_t p = row;
    while (p < m && a[p][col] == 0)
      p++;
    if (p == m)
      continue;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    const Rational inv = 1 / a[row][col];
    for (size_t j = col; j < nv; j++)
      a[row][j] *= inv;
    b[row] *= inv;
    for (size_t i = 0; i < m; i++) {
      if (i == row || a[i][col] == 0)
        continue;
      const Rational f = a[i][col];
      for (size_t j = col; j < nv; j++)
        if (a[row][j] != 0)
          a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    pivot_col.push_back(col);
    row++;
  }
  s.rank = row;
  s.consistent = true;
  for (size_t i = row; i < m; i++)
    if (b[i] != 0)
      s.consistent = false;
  s.x.assign(nv, 0);
  for (size_t i = 0; i < row; i++)
    s.x[pivot_col[i]] = b[i];
  return s;
}

} // namespace qmv
