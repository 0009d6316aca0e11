/**
 * Copyright 2026, the qmv authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

/**
 * @file    cg.hpp
 * @brief   Clebsch-Gordan transform for spin-1/2 (x) spin-l/2 and its dual
 */

#pragma once

#include "qmv/rep2.hpp"

namespace qmv {

enum class CGKind { standard, dual };

// Rows [0, l) carry the T^{l-1} sector, rows [l, 2l+2) the T^{l+1} sector.
// Columns are indexed |i>|j> -> i*(l+1) + j, qubit first.
struct CGTransform {
  int l = 1;
  CMatrix matrix;
  CGKind kind = CGKind::standard;
};

// R^l(k) = 1/sqrt(l+1) [[sqrt k, sqrt(l+1-k)], [-sqrt(l+1-k), sqrt k]]
inline Eigen::Matrix2d rotation_r(int l, int k) {
  if (k < 0 || k > l + 1)
    throw std::out_of_range("rotation_r: k out of range");
  const double s = 1.0 / std::sqrt(double(l + 1));
  const double a = std::sqrt(double(k)) * s, b = std::sqrt(double(l + 1 - k)) * s;
  Eigen::Matrix2d r;
  r << a, b, -b, a;
  return r;
}

inline CGTransform cg_transform(int l) {
  if (l < 1)
    throw std::invalid_argument("cg_transform: l must be >= 1");
  const int dim = 2 * l + 2;
  CMatrix c = CMatrix::Zero(dim, dim);
  for (int i = 0; i <= 1; i++)
    for (int j = 0; j <= l; j++) {
      const int k = j + i;
      const auto r = rotation_r(l, k);
      const int col = i * (l + 1) + j;
      // |k-1>_l exists only for 1 <= k <= l.
      if (k >= 1 && k <= l)
        c(k - 1, col) = r(i, 0);
      c(l + k, col) = r(i, 1);
    }
  return {l, c, CGKind::standard};
}

inline CGTransform dual_cg_transform(int l) {
  CGTransform c = cg_transform(l);
  CMatrix s(2, 2);
  s << 0, 1, -1, 0;
  c.matrix = c.matrix * kron(s, CMatrix::Identity(l + 1, l + 1));
  c.kind = CGKind::dual;
  return c;
}

inline CMatrix direct_sum(const CMatrix &a, const CMatrix &b) {
  CMatrix r = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  r.topLeftCorner(a.rows(), a.cols()) = a;
  r.bottomRightCorner(b.rows(), b.cols()) = b;
  return r;
}

// M* = (M^{-1})^T via the 2x2 adjugate.
inline CMatrix inverse_transpose2(const CMatrix &m) {
  const complex_t d = det2(m);
  CMatrix r(2, 2);
  r << m(1, 1) / d, -m(1, 0) / d, -m(0, 1) / d, m(0, 0) / d;
  return r;
}

} // namespace qmv
