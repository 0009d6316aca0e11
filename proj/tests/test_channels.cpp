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

namespace {

const Extremal kBoth[] = {Extremal::tr, Extremal::unot};

CMatrix projector(int dim, int i) {
  CMatrix p = CMatrix::Zero(dim, dim);
  p(i, i) = 1;
  return p;
}

int numerical_rank(const CMatrix &h) {
  int r = 0;
  for (double e : hermitian_eigenvalues(h))
    r += std::abs(e) > Tolerances::rank;
  return r;
}

} // namespace

TEST_CASE("l = 1 Choi matrices") {
  CHECK(max_abs_diff(extremal_choi(1, Extremal::tr), golden::extremal_l1_tr().to_cmatrix()) <
        1e-14);
  CHECK(max_abs_diff(extremal_choi(1, Extremal::unot), golden::extremal_l1_unot().to_cmatrix()) <
        1e-14);
}

TEST_CASE("Choi relation, ranks and CPTP") {
  for (int l = 1; l <= 10; l++) {
    const CMatrix jt = extremal_choi(l, Extremal::tr), ju = extremal_choi(l, Extremal::unot);
    const int D = 2 * l + 2;
    CHECK(max_abs_diff(double(l) * jt + double(l + 2) * ju, double(l + 1) * CMatrix::Identity(D, D)) <
          1e-10);
    CHECK(numerical_rank(jt) == l);
    CHECK(numerical_rank(ju) == l + 2);
    for (const CMatrix &j : {jt, ju}) {
      const auto r = check_cptp(j, 2, l + 1);
      CHECK(r.is_cp);
      CHECK(r.is_tp);
    }
    // Convex mixtures stay CPTP.
    for (double t : {0.0, 0.25, 0.5, 1.0}) {
      const auto r = check_cptp(t * jt + (1 - t) * ju, 2, l + 1);
      CHECK((r.is_cp && r.is_tp));
    }
  }
}

TEST_CASE("Kraus operators") {
  // Single-qubit UNOT, compared up to a global sign of the whole Kraus set.
  const double s23 = std::sqrt(2.0 / 3), s13 = std::sqrt(1.0 / 3);
  std::vector<CMatrix> want(3, CMatrix::Zero(2, 2));
  want[0](1, 0) = -s23;
  want[1](0, 0) = s13;
  want[1](1, 1) = -s13;
  want[2](0, 1) = s23;
  const auto ks = extremal_kraus(1, Extremal::unot);
  REQUIRE(ks.size() == 3);
  double plus = 0, minus = 0;
  for (int i = 0; i < 3; i++) {
    plus = std::max(plus, max_abs_diff(ks[i], want[i]));
    minus = std::max(minus, max_abs_diff(ks[i], -want[i]));
  }
  CHECK(std::min(plus, minus) < 1e-15);

  for (int l = 1; l <= 10; l++)
    for (auto which : kBoth) {
      const auto k = extremal_kraus(l, which);
      CHECK(k.size() == size_t(which == Extremal::tr ? l : l + 2));
      CMatrix s = CMatrix::Zero(l + 1, l + 1);
      for (const auto &x : k)
        s += x.adjoint() * x;
      CHECK(max_abs_diff(s, CMatrix::Identity(l + 1, l + 1)) < 1e-10);
      CHECK(max_abs_diff(choi_from_kraus(k), extremal_choi(l, which)) < 1e-10);
    }
}

TEST_CASE("Stinespring isometries") {
  const CMatrix u1 = extremal_stinespring(1, Extremal::tr);
  CHECK(std::abs(u1(0, 0) - 1.0) < 1e-15);
  CHECK(u1.col(0).norm() == Catch::Approx(1.0));
  Rng rng(31);
  for (int l = 1; l <= 10; l++)
    for (auto which : kBoth) {
      const CMatrix u = extremal_stinespring(l, which);
      CHECK(max_abs_diff(u.adjoint() * u, CMatrix::Identity(l + 1, l + 1)) < 1e-10);
      if (l <= 8) {
        const CMatrix rho = random_density(rng, l + 1);
        CHECK(max_abs_diff(stinespring_apply(u, rho, 2), kraus_apply(extremal_kraus(l, which), rho)) <
              1e-12);
      }
    }
}

TEST_CASE("closed-form action") {
  CHECK(max_abs_diff(apply_extremal(2, Extremal::tr, projector(3, 1)), CMatrix::Identity(2, 2) / 2.0) <
        1e-15);
  CMatrix want = CMatrix::Zero(2, 2);
  want(0, 0) = 1.0 / 3;
  want(1, 1) = 2.0 / 3;
  CHECK(max_abs_diff(apply_extremal(1, Extremal::unot, projector(2, 0)), want) < 1e-15);
  Rng rng(32);
  for (int l = 1; l <= 8; l++)
    for (auto which : kBoth)
      for (int trial = 0; trial < 20; trial++) {
        const CMatrix rho = random_density(rng, l + 1);
        CHECK(max_abs_diff(apply_extremal(l, which, rho), choi_apply(extremal_choi(l, which), rho, 2, l + 1)) <
              1e-10);
      }
}

TEST_CASE("covariance") {
  Rng rng(33);
  for (int l = 1; l <= 8; l++)
    for (auto which : kBoth) {
      const CMatrix j = extremal_choi(l, which);
      for (int trial = 0; trial < 10; trial++) {
        const CMatrix u = haar_unitary(rng);
        const CMatrix t = wigner_t(l, u);
        const CMatrix rho = random_density(rng, l + 1);
        CHECK(max_abs_diff(apply_extremal(l, which, t * rho * t.adjoint()),
                           u * apply_extremal(l, which, rho) * u.adjoint()) < 1e-10);
        // Output-first Choi convention: J commutes with U (x) conj(T^l(U)).
        const CMatrix w = kron(u, t.conjugate());
        CHECK(max_abs_diff(w * j, j * w) < 1e-10);
      }
    }
}

TEST_CASE("circuits") {
  CHECK(max_abs_diff(compose_circuit(extremal_circuit(1, Extremal::unot)),
                     extremal_stinespring(1, Extremal::unot)) < 1e-12);
  // Tr: the register has one extra level; the wrap-around state stays empty.
  for (int l = 1; l <= 8; l++) {
    const auto c = extremal_circuit(l, Extremal::tr);
    const CMatrix cu = compose_circuit(c);
    REQUIRE(cu.rows() == 2 * (l + 1));
    CHECK(cu.row(l).norm() < 1e-15);
    CHECK(cu.row(2 * l + 1).norm() < 1e-15);
    const CMatrix u = extremal_stinespring(l, Extremal::tr);
    CHECK(max_abs_diff(cu.middleRows(0, l), u.middleRows(0, l)) < 1e-12);
    CHECK(max_abs_diff(cu.middleRows(l + 1, l), u.middleRows(l, l)) < 1e-12);
    int rotations = 0;
    for (const auto &g : c.gates)
      rotations += g.kind == Gate::Kind::cond_rotation;
    CHECK(rotations == 1);
  }
  Rng rng(34);
  for (int l = 1; l <= 6; l++)
    for (auto which : kBoth) {
      const auto c = extremal_circuit(l, which);
      for (int w = 0; w <= l; w++)
        CHECK(max_abs_diff(circuit_apply(c, projector(l + 1, w)),
                           apply_extremal(l, which, projector(l + 1, w))) < 1e-10);
      const CMatrix rho = random_density(rng, l + 1);
      CHECK(max_abs_diff(circuit_apply(c, rho), apply_extremal(l, which, rho)) < 1e-10);
    }
  const auto j = to_json(extremal_circuit(2, Extremal::unot));
  CHECK(j["channel"] == "unot");
  CHECK(j["gates"].size() == 5);
}

TEST_CASE("independent oracles") {
  CMatrix want = CMatrix::Zero(2, 2);
  want(0, 0) = 1.0 / 3;
  want(1, 1) = 2.0 / 3;
  CHECK(max_abs_diff(unot_integral_check(1, projector(2, 0)), want) < 1e-6);
  CHECK(max_abs_diff(unot_integral_check(2, projector(3, 1)),
                     apply_extremal(2, Extremal::unot, projector(3, 1))) < 1e-6);
  Rng rng(35);
  for (int l = 1; l <= 5; l++) {
    const CMatrix rho = random_density(rng, l + 1);
    const CMatrix q = unot_integral_check(l, rho);
    CHECK(max_abs_diff(q, apply_extremal(l, Extremal::unot, rho)) < 1e-6);
    CHECK(std::abs(q.trace() - 1.0) < 1e-8);
    CHECK(max_abs_diff(partial_trace_channel(l, rho), apply_extremal(l, Extremal::tr, rho)) < 1e-12);
  }
}
