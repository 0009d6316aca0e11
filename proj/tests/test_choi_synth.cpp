/**
 * Copyright 2026, the qmv authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include <catch_amalgamated.hpp>

#include "qmv/golden.hpp"
#include "qmv/choi_synth.hpp"
#include "qmv/sim.hpp"

using namespace qmv;

namespace {

const golden::ChoiEntry &reference(const std::string &name, bool ideal) {
  for (const auto &e : golden::choi_matrices())
    if (e.name == name && e.ideal == ideal)
      return e;
  throw std::logic_error("no reference " + name);
}

// Literal oracle: every entry of J is an unknown. Equations come from random
// product inputs psi^{(x)(n-h)} (x) perp^{(x)h} (in random qubit order) whose
// output must be the Bloch vector of psi scaled by (2c_h - 1)(-1)^{f(h)}, plus
// invariance under adjacent transpositions. Solved in floating point.
CMatrix full_j_oracle(int n, const BoolFn &f, const std::vector<Rational> &c, Rng &rng,
                      Eigen::Index &rank) {
  const size_t din = size_t(1) << n, D = 2 * din, nu = D * D;
  auto var = [&](size_t r, size_t col) { return r * D + col; };
  struct Entry {
    size_t row, col;
    complex_t value;
  };
  std::vector<Entry> trip;
  std::vector<complex_t> rhs;
  size_t row = 0;
  const int samples = 40 * int(din);
  for (int s = 0; s < samples; s++) {
    const int h = s % (n / 2 + 1);
    const CMatrix u = haar_unitary(rng);
    const CVector psi = u.col(0), perp = u.col(1);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    CVector in = CVector::Ones(1);
    for (int q = 0; q < n; q++)
      in = kron(in, order[q] < h ? perp : psi).eval();
    const CMatrix rho = in * in.adjoint();
    const double scale = (2 * c[h].get_d() - 1) * (f.bar(h) ? -1 : 1);
    const CMatrix pp = psi * psi.adjoint();
    const CMatrix target = 0.5 * CMatrix::Identity(2, 2) + scale * (pp - 0.5 * CMatrix::Identity(2, 2));
    for (int a = 0; a < 2; a++)
      for (int b = 0; b < 2; b++) {
        for (size_t x = 0; x < din; x++)
          for (size_t y = 0; y < din; y++)
            if (std::abs(rho(x, y)) > 0)
              trip.push_back({row, var(a * din + x, b * din + y), rho(x, y)});
        rhs.push_back(target(a, b));
        row++;
      }
  }
  for (int k = 0; k + 1 < n; k++) {
    Permutation pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    std::swap(pi[k], pi[k + 1]);
    for (int a = 0; a < 2; a++)
      for (int b = 0; b < 2; b++)
        for (size_t x = 0; x < din; x++)
          for (size_t y = 0; y < din; y++) {
            const size_t px = permute_index(n, pi, x), py = permute_index(n, pi, y);
            if (px == x && py == y)
              continue;
            trip.push_back({row, var(a * din + px, b * din + py), 1.0});
            trip.push_back({row, var(a * din + x, b * din + y), -1.0});
            rhs.push_back(0);
            row++;
          }
  }
  CMatrix A = CMatrix::Zero(row, nu);
  for (const auto &t : trip)
    A(t.row, t.col) += t.value;
  const CVector bv = Eigen::Map<const CVector>(rhs.data(), rhs.size());
  Eigen::ColPivHouseholderQR<CMatrix> qr(A);
  qr.setThreshold(1e-10);
  rank = qr.rank();
  const CVector sol = qr.solve(bv);
  CMatrix j(D, D);
  for (size_t r = 0; r < D; r++)
    for (size_t col = 0; col < D; col++)
      j(r, col) = sol(var(r, col));
  return j;
}

} // namespace

TEST_CASE("pair orbits") {
  for (int n = 1; n <= 5; n++) {
    const PairOrbits orb(n);
    CHECK(orb.size() == size_t(binomial(n + 3, 3).get_si()));
    Integer total = 0;
    for (size_t o = 0; o < orb.size(); o++)
      total += multinomial(orb.counts[o]);
    CHECK(total == Integer(1) << (2 * n));
  }
}

TEST_CASE("exact synthesis matches the reference matrices") {
  const auto id = synthesize_choi(1, BoolFn::from_table("0"), {Rational(1)});
  CHECK(id.matrix == reference("ID", false).matrix());
  CHECK(id.is_cp);
  const auto nt = synthesize_choi(1, BoolFn::from_table("1"), {make_rational(2, 3)});
  CHECK(nt.matrix == reference("NOT", false).matrix());
  const auto maj = synthesize_choi(3, BoolFn::majority(3), {Rational(1), make_rational(8, 9)});
  CHECK(maj.matrix == reference("MAJ3", false).matrix());
  CHECK(maj.matrix(0, 0) == 1);
  CHECK(maj.matrix(0, 9) == make_rational(1, 3));
  CHECK(maj.is_cp);
  CHECK(maj.rank == maj.unknowns);

  const auto inot = ideal_choi(1, BoolFn::from_table("1"));
  CHECK(inot.matrix == reference("NOT", true).matrix());
  CHECK_FALSE(inot.is_cp);
  const auto ev = hermitian_eigenvalues(inot.matrix.to_cmatrix());
  for (int i = 0; i < 4; i++)
    CHECK(std::abs(ev(i) - golden::ideal_not_spectrum()[i]) < 1e-12);
  const auto imaj = ideal_choi(3, BoolFn::majority(3));
  CHECK(imaj.matrix == reference("MAJ3", true).matrix());
  CHECK(imaj.matrix(3, 3) == 0);
  CHECK(imaj.matrix(0, 9) == make_rational(1, 3));
  CHECK(ideal_choi(1, BoolFn::from_table("0")).matrix == reference("ID", false).matrix());
}

TEST_CASE("synthesized matrices are Hermitian, TP and permutation invariant") {
  for (int n : {1, 3, 5})
    for (const auto &f : all_functions(n)) {
      const auto r = synthesize_choi(n, f, solve_lp(n, f).per_weight);
      const size_t din = size_t(1) << n;
      CHECK(r.matrix.is_symmetric());
      CHECK(r.imag == QMatrix(2 * din, 2 * din));
      CHECK(is_tp_exact(r.matrix, 2, din));
      CHECK(r.is_cp);
      const CMatrix j = r.matrix.to_cmatrix();
      for (int k = 0; k + 1 < n; k++) {
        Permutation pi(n);
        std::iota(pi.begin(), pi.end(), 0);
        std::swap(pi[k], pi[k + 1]);
        const CMatrix p = kron(CMatrix::Identity(2, 2), permutation_matrix(n, pi));
        CHECK(max_abs_diff(p * j * p.adjoint(), j) == 0);
      }
    }
  const auto big = ideal_choi(5, BoolFn::majority(5));
  CHECK(big.matrix.rows() == 64);
  CHECK(is_tp_exact(big.matrix, 2, 32));
  CHECK_THROWS(ideal_choi(7, BoolFn::majority(7)));
}

TEST_CASE("literal full-J oracle agrees with the orbit synthesis") {
  Rng rng(51);
  for (int n : {1, 3})
    for (const auto &f : all_functions(n))
      for (bool ideal : {false, true}) {
        const auto c = ideal ? std::vector<Rational>(n / 2 + 1, 1) : solve_lp(n, f).per_weight;
        Eigen::Index rank = 0;
        const CMatrix oracle = full_j_oracle(n, f, c, rng, rank);
        const size_t D = size_t(2) << n;
        CHECK(rank == Eigen::Index(D * D));
        const auto r = synthesize_choi(n, f, c);
        CHECK(max_abs_diff(oracle, r.matrix.to_cmatrix()) < 1e-9);
      }
}

TEST_CASE("template assembly") {
  CHECK(assemble_choi_from_template(1, BoolFn::from_table("0"), {Rational(1)}) ==
        reference("ID", false).matrix());
  const auto maj = BoolFn::majority(3);
  CHECK(assemble_choi_from_template(3, maj, {Rational(1), Rational(1)}) ==
        synthesize_choi(3, maj, {Rational(1), make_rational(8, 9)}).matrix);
  CHECK(assemble_choi_from_template(3, BoolFn::parity(3), {make_rational(1, 2), Rational(0)}) ==
        reference("PAR3", false).matrix());
  // Every optimal channel for n <= 5 is the template at its LP solution.
  for (int n : {1, 3, 5})
    for (const auto &f : all_functions(n)) {
      const auto s = solve_lp(n, f);
      CHECK(assemble_choi_from_template(n, f, s.t) == synthesize_choi(n, f, s.per_weight).matrix);
    }
}
