/**
 * Copyright 2026, the qmv authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include <catch_amalgamated.hpp>

#include "qmv/golden.hpp"
#include "qmv/sim.hpp"

using namespace qmv;

TEST_CASE("rotation_r") {
  Eigen::Matrix2d r0;
  r0 << 0, 1, -1, 0;
  for (int l = 1; l <= 10; l++) {
    CHECK((rotation_r(l, 0) - r0).norm() < 1e-15);
    CHECK((rotation_r(l, l + 1) - Eigen::Matrix2d::Identity()).norm() < 1e-15);
    for (int k = 0; k <= l + 1; k++) {
      const auto r = rotation_r(l, k);
      CHECK((r * r.transpose() - Eigen::Matrix2d::Identity()).norm() < 1e-15);
    }
  }
  CHECK_THROWS(rotation_r(2, 4));
}

TEST_CASE("cg_transform is orthogonal and block diagonalizes M (x) T^l(M)") {
  Rng rng(21);
  for (int l = 1; l <= 12; l++) {
    const CMatrix c = cg_transform(l).matrix;
    CHECK(max_abs_diff(c * c.adjoint(), CMatrix::Identity(2 * l + 2, 2 * l + 2)) < 1e-12);
    CHECK(c.imag().cwiseAbs().maxCoeff() == 0);
  }
  for (int l = 1; l <= 8; l++)
    for (int trial = 0; trial < 3; trial++) {
      const CMatrix m = random_gaussian_matrix(rng, 2, 2);
      const CMatrix c = cg_transform(l).matrix;
      const CMatrix lhs = c * kron(m, wigner_t(l, m)) * c.adjoint();
      const CMatrix rhs = direct_sum(det2(m) * wigner_t(l - 1, m), wigner_t(l + 1, m));
      CHECK(max_abs_diff(lhs, rhs) < 1e-9);
    }
}

TEST_CASE("antisymmetric l=1 input lands in the lower-spin block") {
  CVector psi = CVector::Zero(4);
  psi(1) = 1 / std::sqrt(2.0);  // |0>|1>
  psi(2) = -1 / std::sqrt(2.0); // |1>|0>
  const CVector out = cg_transform(1).matrix * psi;
  CHECK(std::abs(std::abs(out(0)) - 1.0) < 1e-15);
  CHECK(out.tail(3).norm() < 1e-15);
}

TEST_CASE("dual_cg_transform") {
  CHECK(max_abs_diff(dual_cg_transform(1).matrix, golden::dual_cg_l1()) < 1e-12);
  CMatrix s(2, 2);
  s << 0, 1, -1, 0;
  Rng rng(22);
  for (int l = 1; l <= 10; l++) {
    const CMatrix d = dual_cg_transform(l).matrix;
    CHECK(max_abs_diff(d, cg_transform(l).matrix * kron(s, CMatrix::Identity(l + 1, l + 1))) <
          1e-14);
    CMatrix m = random_gaussian_matrix(rng, 2, 2);
    const CMatrix minv = m.inverse();
    CHECK(max_abs_diff(inverse_transpose2(m), minv.transpose()) < 1e-12);
    const CMatrix lhs = d * kron(inverse_transpose2(m), wigner_t(l, m)) * d.adjoint();
    const CMatrix rhs = direct_sum(wigner_t(l - 1, m), wigner_t(l + 1, m) / det2(m));
    CHECK(max_abs_diff(lhs, rhs) < 1e-9);
  }
}
