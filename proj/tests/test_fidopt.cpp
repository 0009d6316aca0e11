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

std::vector<Rational> R(std::initializer_list<const char *> v) {
  std::vector<Rational> r;
  for (const char *s : v)
    r.push_back(parse_rational(s));
  return r;
}

// Worst-case fidelity in double precision, straight from the coefficient
// tables.
double worst_case(const LPCoefficients &co, const std::vector<double> &t) {
  const int m = co.n / 2 + 1;
  double best = 2;
  for (int h = 0; h < m; h++) {
    double c = 0;
    for (int k = 0; k <= h; k++)
      c += co.p[k][h].get_d() * (t[k] * co.a[k][h].get_d() + (1 - t[k]) * co.b[k][h].get_d());
    best = std::min(best, c);
  }
  return best;
}

} // namespace

TEST_CASE("truth tables") {
  const auto f = BoolFn::from_table("01");
  CHECK(f.n() == 3);
  CHECK(f(0) == 0);
  CHECK(f(1) == 1);
  CHECK(f(2) == 0);
  CHECK(f(3) == 1);
  CHECK(BoolFn::parity(7).table() == "0101");
  CHECK(BoolFn::majority(7).table() == "0000");
  CHECK(all_functions(7).size() == 16);
  CHECK_THROWS(BoolFn::from_table("0x1"));
  CHECK_THROWS(BoolFn::from_table(""));
  CHECK_THROWS(BoolFn(4, {0, 0, 0}));
}

TEST_CASE("lp_coefficients") {
  const auto co = lp_coefficients(3, BoolFn::majority(3));
  CHECK(co.p[0][1] == make_rational(1, 3));
  CHECK(co.a[0][0] == 1);
  CHECK(co.b[0][0] == make_rational(1, 5));
  for (int n = 1; n <= 31; n += 2) {
    const auto c = lp_coefficients(n, BoolFn::parity(n));
    for (int h = 0; h <= n / 2; h++) {
      Rational s = 0;
      for (int k = 0; k <= h; k++)
        s += c.p[k][h];
      CHECK(s == 1);
    }
  }
}

TEST_CASE("solve_lp reproduces the optimal fidelity table") {
  auto s = solve_lp(1, BoolFn::from_table("0"));
  CHECK(s.fidelity == 1);
  CHECK(s.t == R({"1"}));
  s = solve_lp(3, BoolFn::majority(3));
  CHECK(s.fidelity == make_rational(8, 9));
  CHECK(s.t == R({"1", "1"}));
  CHECK(s.per_weight == R({"1", "8/9"}));
  s = solve_lp(3, BoolFn::parity(3));
  CHECK(s.fidelity == make_rational(3, 5));
  CHECK(s.t == R({"1/2", "0"}));
  s = solve_lp(3, BoolFn::from_table("11"));
  CHECK(s.fidelity == make_rational(29, 45));
  CHECK(s.per_weight == R({"4/5", "29/45"}));
  CHECK(solve_lp(7, BoolFn::from_table("0101")).fidelity == make_rational(5, 9));
  for (const auto &row : golden::optimal_rows()) {
    const auto f = BoolFn::from_table(row.table);
    const auto sol = solve_lp(f.n(), f);
    CHECK(to_string(sol.fidelity) == row.fidelity);
  }
  CHECK_THROWS(solve_lp(3, BoolFn::majority(3), std::set<int>{2}));
  CHECK_THROWS(solve_lp(3, BoolFn::majority(3), std::set<int>{}));
}

TEST_CASE("solve_lp is optimal against a brute-force grid") {
  for (int n : {1, 3, 5}) {
    for (const auto &f : all_functions(n)) {
      const auto co = lp_coefficients(n, f);
      const auto s = solve_lp(n, f);
      const int m = n / 2 + 1;
      CHECK(std::abs(worst_case(co, to_doubles(s.t)) - s.fidelity.get_d()) < 1e-15);
      const int grid = n == 5 ? 20 : 200;
      double best = -1;
      std::vector<int> idx(m, 0);
      while (true) {
        std::vector<double> t(m);
        for (int k = 0; k < m; k++)
          t[k] = double(idx[k]) / grid;
        best = std::max(best, worst_case(co, t));
        int k = 0;
        while (k < m && ++idx[k] > grid)
          idx[k++] = 0;
        if (k == m)
          break;
      }
      CHECK(best <= s.fidelity.get_d() + 1e-12);
      for (const auto &t : s.t) {
        CHECK(t >= 0);
        CHECK(t <= 1);
      }
    }
  }
}

TEST_CASE("per_weight_fidelity") {
  CHECK(per_weight_fidelity(3, BoolFn::majority(3), R({"1", "1"})) == R({"1", "8/9"}));
  CHECK(per_weight_fidelity(1, BoolFn::from_table("1"), R({"0"})) == R({"2/3"}));
  for (const auto &f : all_functions(7)) {
    const auto c = per_weight_fidelity(7, f, std::vector<Rational>(4, 1));
    CHECK(c[0] == 1 - f.bar(0));
  }
}

TEST_CASE("majority closed forms") {
  CHECK(majority_fidelity_direct(3, 1) == make_rational(8, 9));
  CHECK(majority_fidelity_direct(5, 2) == make_rational(62, 75));
  for (int n = 1; n <= 31; n += 2) {
    CHECK(majority_fidelity_direct(n, 0) == 1);
    const auto chain = majority_fidelity_chain(n, (n - 1) / 2);
    for (int h = 1; h <= (n - 1) / 2; h++) {
      CHECK(majority_recurrence_a(n, h) > 0);
      CHECK(majority_recurrence_a(n, h) < 1);
      CHECK(chain[h] == majority_fidelity_direct(n, h));
    }
    CHECK(majority_fidelity_recursive(n) == chain.back());
  }
  CHECK(majority_recurrence_step(3, 1, 1) == make_rational(8, 9));
  CHECK(majority_fidelity_recursive(5) == make_rational(62, 75));
  CHECK(majority_fidelity_recursive(7) == make_rational(2888, 3675));
  CHECK(majority_fidelity_recursive(19) == parse_rational("30465827276/44801898141"));
  CHECK(majority_fidelity_recursive(21) == parse_rational("6378478534/9503432939"));
  // The promise closed form is the promise LP.
  for (int n : {7, 13, 25}) {
    std::set<int> W;
    for (int h = 0; h <= n / 6; h++)
      W.insert(h);
    CHECK(solve_lp(n, BoolFn::majority(n), W).fidelity == majority_fidelity_promise(n, n / 6));
  }
}

TEST_CASE("parity and trivial strategies") {
  CHECK(parity_conjecture(3) == make_rational(3, 5));
  CHECK(parity_conjecture(5) == make_rational(5, 7));
  for (int n = 1; n <= 15; n += 2)
    CHECK(solve_lp(n, BoolFn::parity(n)).fidelity == parity_conjecture(n));
  CHECK(trivial_strategy_fidelity(3, false) == make_rational(2, 3));
  CHECK(trivial_strategy_fidelity(3, true) == make_rational(5, 6));
  for (int n = 3; n <= 15; n += 2)
    CHECK(trivial_strategy_fidelity(n, false) < solve_lp(n, BoolFn::majority(n)).fidelity);
}

TEST_CASE("conjectured ideal interpolation") {
  CHECK(conjectured_ideal_t(1, BoolFn::from_table("0"), 0) == 1);
  CHECK(conjectured_ideal_t(1, BoolFn::from_table("1"), 0) == make_rational(-1, 2));
  for (int n : {1, 3, 5})
    for (const auto &f : all_functions(n)) {
      std::vector<Rational> t;
      for (int k = 0; k <= n / 2; k++)
        t.push_back(conjectured_ideal_t(n, f, k));
      CHECK(per_weight_fidelity(n, f, t) == std::vector<Rational>(n / 2 + 1, 1));
    }
}
