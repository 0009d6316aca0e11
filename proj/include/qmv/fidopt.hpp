/**
 * Copyright 2026, the qmv authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

/**
 * @file    fidopt.hpp
 * @brief   Exact linear program for the optimal fidelity of symmetric self-dual
 *          Boolean functions, and closed forms for majority and parity
 */

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qmv/core.hpp"

namespace qmv {

// Symmetric self-dual Boolean function on odd n bits, stored as f(0..floor(n/2))
// by Hamming weight.
class BoolFn {
public:
  BoolFn() = default;
  BoolFn(int n, std::vector<int> half) : n_(n), half_(std::move(half)) {
    if (n < 1 || n % 2 == 0)
      throw std::invalid_argument("BoolFn: n must be odd and positive");
    if (int(half_.size()) != n / 2 + 1)
      throw std::invalid_argument("BoolFn: truth table must have floor(n/2)+1 entries");
    for (int b : half_)
      if (b != 0 && b != 1)
        throw std::invalid_argument("BoolFn: truth table entries must be 0 or 1");
  }

  // "0101" -> n = 7
  static BoolFn from_table(const std::string &s) {
    if (s.empty())
      throw std::invalid_argument("BoolFn: empty truth table");
    std::vector<int> h;
    for (char c : s) {
      if (c != '0' && c != '1')
        throw std::invalid_argument("BoolFn: truth table must be a bitstring");
      h.push_back(c - '0');
    }
    return BoolFn(2 * int(s.size()) - 1, h);
  }

  static BoolFn majority(int n) { return BoolFn(n, std::vector<int>(n / 2 + 1, 0)); }
  static BoolFn parity(int n) {
    std::vector<int> h(n / 2 + 1);
    for (size_t i = 0; i < h.size(); i++)
      h[i] = int(i % 2);
    return BoolFn(n, h);
  }

  int n() const { return n_; }
  int half_size() const { return int(half_.size()); }
  // f restricted to weights h <= floor(n/2)
  int bar(int h) const { return half_.at(h); }
  // Full table via self-duality f(n-h) = f(h) xor 1.
  int operator()(int h) const {
    if (h < 0 || h > n_)
      throw std::out_of_range("BoolFn: weight out of range");
    return 2 * h < n_ ? half_[h] : 1 - half_[n_ - h];
  }
  std::string table() const {
    std::string s;
    for (int b : half_)
      s += char('0' + b);
    return s;
  }

private:
  int n_ = 1;
  std::vector<int> half_{0};
};

// All 2^(floor(n/2)+1) functions on n bits, in binary order of the table.
inline std::vector<BoolFn> all_functions(int n) {
  const int k = n / 2 + 1;
  std::vector<BoolFn> out;
  for (int mask = 0; mask < (1 << k); mask++) {
    std::vector<int> h(k);
    for (int i = 0; i < k; i++)
      h[i] = (mask >> (k - 1 - i)) & 1;
    out.emplace_back(n, h);
  }
  return out;
}

// Tables indexed [k][h] for 0 <= k <= h <= floor(n/2); entries with k > h are 0.
struct LPCoefficients {
  int n = 1;
  std::vector<std::vector<Rational>> p, a, b;
};

inline Rational block_probability(int n, int k, int h) {
  Rational p(binomial(n, k) - binomial(n, k - 1), binomial(n, h));
  p.canonicalize();
  return p;
}

inline LPCoefficients lp_coefficients(int n, const BoolFn &f) {
  if (f.n() != n)
    throw std::invalid_argument("lp_coefficients: n does not match the function");
  const int m = n / 2 + 1;
  LPCoefficients c;
  c.n = n;
  c.p.assign(m, std::vector<Rational>(m, 0));
  c.a = c.p;
  c.b = c.p;
  for (int h = 0; h < m; h++) {
    const Rational fb = f.bar(h);
    for (int k = 0; k <= h; k++) {
      c.p[k][h] = block_probability(n, k, h);
      c.a[k][h] = make_rational(n - h - k, n - 2 * k) - fb * make_rational(n - 2 * h, n - 2 * k);
      c.b[k][h] =
          make_rational(h - k + 1, n - 2 * k + 2) + fb * make_rational(n - 2 * h, n - 2 * k + 2);
    }
  }
  return c;
}

inline std::vector<Rational> per_weight_fidelity(const LPCoefficients &co,
                                                 const std::vector<Rational> &t) {
  const int m = co.n / 2 + 1;
  if (int(t.size()) != m)
    throw std::invalid_argument("per_weight_fidelity: t has the wrong length");
  std::vector<Rational> c(m, 0);
  for (int h = 0; h < m; h++)
    for (int k = 0; k <= h; k++)
      c[h] += co.p[k][h] * (t[k] * co.a[k][h] + (1 - t[k]) * co.b[k][h]);
  return c;
}

inline std::vector<Rational> per_weight_fidelity(int n, const BoolFn &f,
                                                 const std::vector<Rational> &t) {
  return per_weight_fidelity(lp_coefficients(n, f), t);
}

struct LPSolution {
  Rational fidelity;
  std::vector<Rational> t;
  std::vector<Rational> per_weight;
  int pivots = 0;
};

class lp_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// maximize obj.x subject to A x <= rhs, x >= 0, rhs >= 0 (origin feasible).
// Dense tableau, Bland's rule.
struct SimplexResult {
  std::vector<Rational> x;
  Rational value;
  int pivots = 0;
};

inline SimplexResult simplex_max(const std::vector<std::vector<Rational>> &A,
                                 const std::vector<Rational> &rhs,
                                 const std::vector<Rational> &obj) {
  const size_t m = A.size(), nv = obj.size(), cols = nv + m;
  for (const auto &r : rhs)
    if (r < 0)
      throw lp_error("simplex: origin infeasible");
  // Tableau rows 0..m-1 constraints, row m objective (z - obj.x = 0).
  std::vector<std::vector<Rational>> T(m + 1, std::vector<Rational>(cols + 1, 0));
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; i++) {
    for (size_t j = 0; j < nv; j++)
      T[i][j] = A[i][j];
    T[i][nv + i] = 1;
    T[i][cols] = rhs[i];
    basis[i] = nv + i;
  }
  for (size_t j = 0; j < nv; j++)
    T[m][j] = -obj[j];
  int pivots = 0;
  for (;;) {
    size_t enter = cols;
    for (size_t j = 0; j < cols; j++)
      if (T[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols)
      break;
    size_t leave = m;
    Rational best;
    for (size_t i = 0; i < m; i++) {
      if (T[i][enter] <= 0)
        continue;
      Rational ratio = T[i][cols] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m)
      throw lp_error("simplex: unbounded");
    const Rational piv = T[leave][enter];
    for (auto &v : T[leave])
      v /= piv;
    for (size_t i = 0; i <= m; i++) {
      if (i == leave || T[i][enter] == 0)
        continue;
      const Rational factor = T[i][enter];
      for (size_t j = 0; j <= cols; j++)
        if (T[leave][j] != 0)
          T[i][j] -= factor * T[leave][j];
    }
    basis[leave] = enter;
    pivots++;
  }
  SimplexResult r;
  r.x.assign(nv, 0);
  for (size_t i = 0; i < m; i++)
    if (basis[i] < nv)
      r.x[basis[i]] = T[i][cols];
  r.value = T[m][cols];
  r.pivots = pivots;
  return r;
}

} // namespace detail

// Maximize c s.t. c_h(t) >= c for h in weight_set and 0 <= t_k <= 1.
inline LPSolution solve_lp(int n, const BoolFn &f,
                           std::optional<std::set<int>> weight_set = std::nullopt) {
  const int m = n / 2 + 1;
  std::set<int> W;
  if (weight_set) {
    W = *weight_set;
    for (int h : W)
      if (h < 0 || h >= m)
        throw std::out_of_range("solve_lp: weight outside 0..floor(n/2)");
    if (W.empty())
      throw std::invalid_argument("solve_lp: empty weight set");
  } else {
    for (int h = 0; h < m; h++)
      W.insert(h);
  }
  const auto co = lp_coefficients(n, f);
  // Variables: x0 = c, x_{1+k} = t_k.
  const size_t nv = m + 1;
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> rhs;
  for (int h : W) {
    std::vector<Rational> row(nv, 0);
    row[0] = 1;
    Rational beta = 0;
    for (int k = 0; k <= h; k++) {
      row[1 + k] = -co.p[k][h] * (co.a[k][h] - co.b[k][h]);
      beta += co.p[k][h] * co.b[k][h];
    }
    A.push_back(row);
    rhs.push_back(beta);
  }
  for (int k = 0; k < m; k++) {
    std::vector<Rational> row(nv, 0);
    row[1 + k] = 1;
    A.push_back(row);
    rhs.push_back(1);
  }
  std::vector<Rational> obj(nv, 0);
  obj[0] = 1;
  const auto res = detail::simplex_max(A, rhs, obj);
  LPSolution sol;
  sol.t.assign(res.x.begin() + 1, res.x.end());
  sol.per_weight = per_weight_fidelity(co, sol.t);
  sol.fidelity = sol.per_weight[*W.begin()];
  for (int h : W)
    if (sol.per_weight[h] < sol.fidelity)
      sol.fidelity = sol.per_weight[h];
  if (sol.fidelity != res.value)
    throw lp_error("solve_lp: objective does not match the binding constraint");
  sol.pivots = res.pivots;
  return sol;
}

//============================================================================
// Majority closed forms
//============================================================================

// F_n(h) = sum_{k<=h} p_k(h) (n-h-k)/(n-2k)
inline Rational majority_fidelity_direct(int n, int h) {
  if (n < 1 || n % 2 == 0 || h < 0 || 2 * h > n - 1)
    throw std::out_of_range("majority_fidelity_direct: need odd n and 0 <= h <= (n-1)/2");
  Rational s = 0;
  for (int k = 0; k <= h; k++)
    s += block_probability(n, k, h) * make_rational(n - h - k, n - 2 * k);
  s.canonicalize();
  return s;
}

inline Rational majority_recurrence_a(int n, int h) {
  Rational a(Integer(n - 2 * h) * h, Integer(n - 2 * h + 2) * (n - h + 1));
  a.canonicalize();
  return a;
}

inline Rational majority_recurrence_b(int n, int h) {
  Integer num = Integer(4) * h * h - Integer(4 * n + 5) * h + Integer(n + 1) * (n + 2);
  Rational b(num, Integer(n - 2 * h + 2) * (n - h + 1));
  b.canonicalize();
  return b;
}

// F_n(h) from F_n(h-1)
inline Rational majority_recurrence_step(int n, int h, const Rational &prev) {
  if (h < 1 || 2 * h > n - 1)
    throw std::out_of_range("majority_recurrence_step: need 1 <= h <= (n-1)/2");
  return majority_recurrence_a(n, h) * prev + majority_recurrence_b(n, h);
}

// F_n(0..h_max) by unwinding the recurrence from F_n(0) = 1.
inline std::vector<Rational> majority_fidelity_chain(int n, int h_max) {
  std::vector<Rational> out{Rational(1)};
  for (int h = 1; h <= h_max; h++)
    out.push_back(majority_recurrence_step(n, h, out.back()));
  return out;
}

// g((n+1)/2)
inline Rational majority_fidelity_recursive(int n) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("majority_fidelity_recursive: n must be odd");
  const int M = (n + 1) / 2;
  std::vector<Rational> g{0, 1, make_rational(8, 9)};
  for (int m = 3; m <= M; m++) {
    Rational pre(Integer(2 * m), Integer(2 * m - 1) * (2 * m - 1) * (2 * m + 1));
    pre.canonicalize();
    Rational inner =
        Rational(2 * m * (4 * m - 7) + 5) * g[m - 1] - Rational(4 * (m - 1) * (m - 2)) * g[m - 2] + 1;
    g.push_back(pre * inner);
  }
  return g[M];
}

// Optimal majority fidelity over the weights h <= h_max. Since
// a_k(h) >= b_k(h) for majority, t = (1,...,1) is optimal for every constraint,
// and F_n(h) decreases in h.
inline Rational majority_fidelity_promise(int n, int h_max) {
  return majority_fidelity_chain(n, h_max).back();
}

inline Rational parity_conjecture(int n) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("parity_conjecture: n must be odd");
  const int ceil_q = (n + 1 + 3) / 4;
  return make_rational(2 * ceil_q + 1, n + 2);
}

// Output one input qubit at random.
inline Rational trivial_strategy_fidelity(int n, bool promise) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("trivial_strategy_fidelity: n must be odd");
  if (promise)
    return make_rational(5, 6);
  return make_rational(1, 2) + make_rational(1, 2 * n);
}

// Interpolation parameters that give fidelity one on every weight when the box
// constraints are dropped (conjectured closed form).
inline Rational conjectured_ideal_t(int n, const BoolFn &f, int k) {
  if (k < 0 || k > n / 2)
    throw std::out_of_range("conjectured_ideal_t: k out of range");
  const long L = n - 2 * k;
  Rational t = make_rational(L, 2 * (L + 1));
  if (k > 0) {
    const int s = f.bar(k - 1) ? -1 : 1;
    Rational term(Integer(k) * L, Integer(2) * (L + 1) * (L + 1));
    term.canonicalize();
    t -= s * term;
  }
  const int s = f.bar(k) ? -1 : 1;
  Rational term(Integer(n - k + 1) * (L + 2), Integer(2) * (L + 1) * (L + 1));
  term.canonicalize();
  t += s * term;
  return t;
}

} // namespace qmv
