/**
 * Copyright 2026, the qmv authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include <catch_amalgamated.hpp>

#include "qmv/sim.hpp"

using namespace qmv;

TEST_CASE("partitions and dimensions") {
  const auto p = partitions(5);
  REQUIRE(p.size() == 3);
  CHECK(p[0] == Partition(5, 0));
  CHECK(p[2] == Partition(3, 2));
  CHECK_THROWS(Partition(1, 2));
  // sum_lambda m_lambda d_lambda = 2^n
  for (int n = 1; n <= 20; n++) {
    Integer total = 0;
    for (const auto &q : partitions(n))
      total += q.m() * q.d_exact();
    CHECK(total == Integer(1) << n);
  }
  CHECK(Partition(2, 1).d() == 2);
  CHECK(Partition(3, 0).d() == 1);
}

TEST_CASE("wigner_t") {
  Rng rng(11);
  const CMatrix m = random_gaussian_matrix(rng, 2, 2);
  CHECK(max_abs_diff(wigner_t(1, m), m) < 1e-15);
  CHECK(max_abs_diff(wigner_t(0, m), CMatrix::Identity(1, 1)) == 0);
  const CMatrix t2 = wigner_t(2, m);
  const complex_t a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  CHECK(std::abs(t2(0, 0) - a * a) < 1e-14);
  CHECK(std::abs(t2(1, 1) - (a * d + b * c)) < 1e-14);
  for (int l = 0; l <= 8; l++)
    CHECK(max_abs_diff(wigner_t(l, CMatrix::Identity(2, 2)), CMatrix::Identity(l + 1, l + 1)) <
          1e-15);
  // Restriction of M^{(x) l} to the symmetric subspace.
  for (int l = 1; l <= 6; l++) {
    const CMatrix v = sym_isometry(l);
    CHECK(max_abs_diff(v.adjoint() * tensor_power(m, l) * v, wigner_t(l, m)) < 1e-10);
  }
  // Homomorphism.
  const CMatrix m2 = random_gaussian_matrix(rng, 2, 2);
  for (int l = 0; l <= 8; l++)
    CHECK(max_abs_diff(wigner_t(l, m * m2), wigner_t(l, m) * wigner_t(l, m2)) < 1e-9);
}

TEST_CASE("q_lambda") {
  Rng rng(12);
  const CMatrix m = random_gaussian_matrix(rng, 2, 2), m2 = random_gaussian_matrix(rng, 2, 2);
  const CMatrix q11 = q_lambda(Partition(1, 1), m);
  REQUIRE(q11.rows() == 1);
  CHECK(std::abs(q11(0, 0) - det2(m)) < 1e-14);
  CHECK(max_abs_diff(q_lambda(Partition(2, 1), m), det2(m) * m) < 1e-14);
  for (const auto &p : partitions(7))
    CHECK(max_abs_diff(q_lambda(p, m * m2), q_lambda(p, m) * q_lambda(p, m2)) < 1e-8);
}

TEST_CASE("dicke states and the symmetric isometry") {
  CVector want = CVector::Zero(4);
  want(1) = want(2) = 1 / std::sqrt(2.0);
  CHECK((dicke_state(2, 1) - want).norm() < 1e-15);
  for (int l = 1; l <= 5; l++)
    CHECK(std::abs(dicke_state(l, 0)(0) - 1.0) < 1e-15);
  for (int l = 1; l <= 6; l++) {
    const CMatrix v = sym_isometry(l);
    CHECK(max_abs_diff(v.adjoint() * v, CMatrix::Identity(l + 1, l + 1)) < 1e-14);
  }
  CHECK(max_abs_diff(sym_isometry(1), CMatrix::Identity(2, 2)) == 0);
  CHECK_THROWS(dicke_state(2, 3));
}

TEST_CASE("coherent states") {
  Rng rng(13);
  CVector k0 = CVector::Zero(2);
  k0(0) = 1;
  CHECK(std::abs(coherent_state(4, k0)(0) - 1.0) < 1e-15);
  CHECK(coherent_state(4, k0).norm() == Catch::Approx(1.0));
  const CVector psi = haar_unitary(rng).col(0);
  for (int l = 1; l <= 6; l++) {
    const CVector c = coherent_state(l, psi);
    CHECK(max_abs_diff(wigner_t(l, psi * psi.adjoint()), c * c.adjoint()) < 1e-12);
    CHECK((sym_isometry(l) * c - tensor_power_state(psi, l)).norm() < 1e-12);
  }
}

TEST_CASE("symmetric projector") {
  CHECK(max_abs_diff(sym_projector(1), CMatrix::Identity(2, 2)) < 1e-15);
  CVector singlet = CVector::Zero(4);
  singlet(1) = 1 / std::sqrt(2.0);
  singlet(2) = -1 / std::sqrt(2.0);
  CHECK(max_abs_diff(sym_projector(2), CMatrix::Identity(4, 4) - singlet * singlet.adjoint()) <
        1e-15);
  // Explicit average over S_3 acting on bit positions.
  CMatrix avg = CMatrix::Zero(8, 8);
  std::vector<int> pi = {0, 1, 2};
  do {
    for (int x = 0; x < 8; x++) {
      int y = 0;
      for (int q = 0; q < 3; q++)
        if (x >> (2 - q) & 1)
          y |= 1 << (2 - pi[q]);
      avg(y, x) += 1.0 / 6;
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  CHECK(max_abs_diff(sym_projector(3), avg) < 1e-15);
}
