/**
 * Copyright 2026, the qmv authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

/**
 * @file    choi_synth.hpp
 * @brief   Exact Choi matrices of optimal channels and of the ideal
 *          (generally non-CP) unitary-equivariant extensions
 */

#pragma once

#include <array>
#include <map>

#include "qmv/channels.hpp"
#include "qmv/fidopt.hpp"
#include "qmv/linsolve.hpp"
#include "qmv/schur.hpp"

namespace qmv {

constexpr int kMaxSynthQubits = 5;

class synthesis_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

//============================================================================
// Polynomials in Bloch coordinates with Gaussian-rational coefficients, kept
// reduced modulo x^2 + y^2 + z^2 - 1 (z-degree <= 1).
//============================================================================

struct CRational {
  Rational re = 0, im = 0;
  CRational() = default;
  CRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  CRational operator*(const CRational &o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CRational &operator+=(const CRational &o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  bool is_zero() const { return re == 0 && im == 0; }
};

class BlochPoly {
public:
  using Mono = std::array<int, 3>; // exponents of x, y, z

  BlochPoly() = default;
  static BlochPoly constant(const CRational &c) {
    BlochPoly p;
    p.add({0, 0, 0}, c);
    return p;
  }
  static BlochPoly monomial(int i, int j, int k, const CRational &c) {
    BlochPoly p;
    p.add({i, j, k}, c);
    return p;
  }

  // Adds c x^i y^j z^k, rewriting z^2 -> 1 - x^2 - y^2.
  void add(const Mono &m, const CRational &c) {
    if (c.is_zero())
      return;
    if (m[2] >= 2) {
      add({m[0], m[1], m[2] - 2}, c);
      add({m[0] + 2, m[1], m[2] - 2}, CRational(-c.re, -c.im));
      add({m[0], m[1] + 2, m[2] - 2}, CRational(-c.re, -c.im));
      return;
    }
    auto &t = terms_[m];
    t += c;
    if (t.is_zero())
      terms_.erase(m);
  }

  BlochPoly operator+(const BlochPoly &o) const {
    BlochPoly r(*this);
    for (const auto &[m, c] : o.terms_)
      r.add(m, c);
    return r;
  }
  BlochPoly operator*(const BlochPoly &o) const {
    BlochPoly r;
    for (const auto &[m1, c1] : terms_)
      for (const auto &[m2, c2] : o.terms_)
        r.add({m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]}, c1 * c2);
    return r;
  }
  BlochPoly scaled(const Rational &s) const {
    BlochPoly r;
    for (const auto &[m, c] : terms_)
      r.add(m, CRational(c.re * s, c.im * s));
    return r;
  }
  const std::map<Mono, CRational> &terms() const { return terms_; }

private:
  std::map<Mono, CRational> terms_;
};

// Entry (a,b) of rho(q r) = 1/2 (I + q (x X + y Y + z Z)).
inline BlochPoly bloch_entry(int a, int b, const Rational &q) {
  const Rational h = make_rational(1, 2);
  if (a == 0 && b == 0)
    return BlochPoly::constant({h}) + BlochPoly::monomial(0, 0, 1, {h * q});
  if (a == 1 && b == 1)
    return BlochPoly::constant({h}) + BlochPoly::monomial(0, 0, 1, {-h * q});
  const Rational hq = h * q;
  const Rational sy = a == 0 ? Rational(-hq) : hq;
  return BlochPoly::monomial(1, 0, 0, {hq}) + BlochPoly::monomial(0, 1, 0, {0, sy});
}

//============================================================================
// S_n orbits of index pairs (x, y): classified by how many positions carry
// each of the column types (x_i, y_i) in {00, 01, 10, 11}.
//============================================================================

struct PairOrbits {
  int n = 0;
  std::vector<std::array<int, 4>> counts;
  std::map<std::array<int, 4>, int> index;

  explicit PairOrbits(int n_) : n(n_) {
    for (int a = 0; a <= n; a++)
      for (int b = 0; a + b <= n; b++)
        for (int c = 0; a + b + c <= n; c++) {
          std::array<int, 4> k{a, b, c, n - a - b - c};
          index[k] = int(counts.size());
          counts.push_back(k);
        }
  }
  int of(size_t x, size_t y) const {
    std::array<int, 4> k{0, 0, 0, 0};
    for (int i = 0; i < n; i++)
      k[2 * ((x >> i) & 1) + ((y >> i) & 1)]++;
    return index.at(k);
  }
  size_t size() const { return counts.size(); }
};

inline Integer multinomial(const std::array<int, 4> &c) {
  Integer r = factorial(c[0] + c[1] + c[2] + c[3]);
  for (int v : c)
    r /= factorial(v);
  return r;
}

// sum over (x,y) in the orbit of prod_i rho((-1)^{s_i} r)[x_i, y_i], with
// s = 0^{n-h} 1^h.
inline std::vector<BlochPoly> orbit_polynomials(const PairOrbits &orb, int h) {
  const int n = orb.n;
  std::array<std::vector<BlochPoly>, 4> pp, pm;
  for (int t = 0; t < 4; t++) {
    const BlochPoly ep = bloch_entry(t >> 1, t & 1, 1), em = bloch_entry(t >> 1, t & 1, -1);
    pp[t].push_back(BlochPoly::constant({1}));
    pm[t].push_back(BlochPoly::constant({1}));
    for (int e = 1; e <= n; e++) {
      pp[t].push_back(pp[t].back() * ep);
      pm[t].push_back(pm[t].back() * em);
    }
  }
  std::vector<BlochPoly> out;
  for (const auto &c : orb.counts) {
    BlochPoly total;
    // split c into cA (n-h positions, +r) and cB (h positions, -r)
    for (int a0 = 0; a0 <= c[0]; a0++)
      for (int a1 = 0; a1 <= c[1]; a1++)
        for (int a2 = 0; a2 <= c[2]; a2++) {
          const int a3 = (n - h) - a0 - a1 - a2;
          if (a3 < 0 || a3 > c[3])
            continue;
          const std::array<int, 4> cA{a0, a1, a2, a3};
          const std::array<int, 4> cB{c[0] - a0, c[1] - a1, c[2] - a2, c[3] - a3};
          BlochPoly term = BlochPoly::constant({Rational(multinomial(cA) * multinomial(cB))});
          for (int t = 0; t < 4; t++)
            term = term * pp[t][cA[t]] * pm[t][cB[t]];
          total = total + term;
        }
    out.push_back(total);
  }
  return out;
}

struct ChoiResult {
  QMatrix matrix; // real part
  QMatrix imag;   // imaginary part (zero for every case tabulated here)
  bool is_cp = false;
  std::vector<Rational> fidelities;
  size_t rank = 0;
  size_t unknowns = 0;
};

inline bool is_tp_exact(const QMatrix &j, size_t d_out, size_t d_in) {
  return partial_trace(j, d_out, d_in, Subsystem::first) == QMatrix::identity(d_in);
}

// Unique Choi matrix with output rho((2c_h - 1)(-1)^{f(h)} r) on every product
// input of weight h and invariance under input permutations.
inline ChoiResult synthesize_choi(int n, const BoolFn &f, const std::vector<Rational> &c) {
  if (n < 1 || n % 2 == 0 || n > kMaxSynthQubits)
    throw std::out_of_range("synthesize_choi: n must be odd and <= 5");
  if (f.n() != n || int(c.size()) != n / 2 + 1)
    throw std::invalid_argument("synthesize_choi: inconsistent arguments");
  const PairOrbits orb(n);
  const size_t no = orb.size();
  std::vector<std::vector<BlochPoly>> polys;
  for (int h = 0; h <= n / 2; h++)
    polys.push_back(orbit_polynomials(orb, h));

  const size_t din = size_t(1) << n;
  ChoiResult res;
  res.matrix = QMatrix(2 * din, 2 * din);
  res.imag = QMatrix(2 * din, 2 * din);
  res.fidelities = c;
  res.unknowns = 0;
  res.rank = 0;
  for (int a = 0; a < 2; a++)
    for (int b = 0; b < 2; b++) {
      // Unknowns: Re J_o (0..no-1), Im J_o (no..2no-1).
      std::vector<std::vector<Rational>> rows;
      std::vector<Rational> rhs;
      for (int h = 0; h <= n / 2; h++) {
        const Rational q = (2 * c[h] - 1) * (f.bar(h) ? -1 : 1);
        const BlochPoly target = bloch_entry(a, b, q);
        std::set<BlochPoly::Mono> monos;
        for (const auto &p : polys[h])
          for (const auto &[m, _] : p.terms())
            monos.insert(m);
        for (const auto &[m, _] : target.terms())
          monos.insert(m);
        for (const auto &m : monos) {
          std::vector<Rational> re(2 * no, 0), im(2 * no, 0);
          for (size_t o = 0; o < no; o++) {
            auto it = polys[h][o].terms().find(m);
            if (it == polys[h][o].terms().end())
              continue;
            const CRational &k = it->second;
            re[o] = k.re;
            re[no + o] = -k.im;
            im[o] = k.im;
            im[no + o] = k.re;
          }
          auto tt = target.terms().find(m);
          const CRational tv = tt == target.terms().end() ? CRational() : tt->second;
          rows.push_back(re);
          rhs.push_back(tv.re);
          rows.push_back(im);
          rhs.push_back(tv.im);
        }
      }
      const auto sol = solve_exact(rows, rhs);
      res.unknowns += sol.unknowns;
      res.rank += sol.rank;
      if (!sol.consistent)
        throw synthesis_error("synthesize_choi: inconsistent linear system");
      if (!sol.unique())
        throw synthesis_error("synthesize_choi: linear system is rank deficient (rank " +
                              std::to_string(sol.rank) + " of " +
                              std::to_string(sol.unknowns) + ")");
      for (size_t x = 0; x < din; x++)
        for (size_t y = 0; y < din; y++) {
          const int o = orb.of(x, y);
          res.matrix(a * din + x, b * din + y) = sol.x[o];
          res.imag(a * din + x, b * din + y) = sol.x[no + o];
        }
    }
  res.is_cp = res.imag == QMatrix(2 * din, 2 * din) &&
              check_cptp(res.matrix, 2, din).min_eigenvalue >= -Tolerances::cptp;
  return res;
}

inline ChoiResult ideal_choi(int n, const BoolFn &f) {
  return synthesize_choi(n, f, std::vector<Rational>(n / 2 + 1, 1));
}

//============================================================================
// Template algorithm as a Choi matrix
//============================================================================

// Floating Choi matrix of the template channel: Gamma, then per block
// t_k Phi_Tr + (1 - t_k) Phi_UNOT with l = n - 2k.
inline CMatrix template_choi(int n, const std::vector<double> &t) {
  const auto sb = build_schur_basis(n);
  const size_t din = size_t(1) << n;
  if (t.size() != sb->blocks.size())
    throw std::invalid_argument("template_choi: t has the wrong length");
  CMatrix j = CMatrix::Zero(2 * din, 2 * din);
  for (size_t bi = 0; bi < sb->blocks.size(); bi++) {
    const auto &bl = sb->blocks[bi];
    const int l = bl.lambda.ell();
    const CMatrix rows = sb->block_rows(bi);
    for (size_t x = 0; x < din; x++)
      for (size_t y = 0; y < din; y++) {
        // Tr_perm[B|x><y|B^dagger]
        CMatrix g = CMatrix::Zero(bl.m, bl.m);
        for (int w = 0; w < bl.m; w++)
          for (int v = 0; v < bl.m; v++) {
            complex_t s = 0;
            for (int i = 0; i < bl.d; i++)
              s += rows(w * bl.d + i, x) * std::conj(rows(v * bl.d + i, y));
            g(w, v) = s;
          }
        const CMatrix out = t[bi] * apply_extremal(l, Extremal::tr, g) +
                            (1 - t[bi]) * apply_extremal(l, Extremal::unot, g);
        for (int a = 0; a < 2; a++)
          for (int b = 0; b < 2; b++)
            j(a * din + x, b * din + y) += out(a, b);
      }
  }
  return j;
}

// Rationalized template Choi matrix; every entry must sit within 1e-9 of a
// rational with denominator <= 1e6.
inline QMatrix assemble_choi_from_template(int n, const BoolFn &f, const std::vector<Rational> &t) {
  if (n > kMaxSynthQubits)
    throw std::out_of_range("assemble_choi_from_template: n must be <= 5");
  if (f.n() != n || int(t.size()) != n / 2 + 1)
    throw std::invalid_argument("assemble_choi_from_template: inconsistent arguments");
  std::vector<double> td;
  for (const auto &v : t)
    td.push_back(v.get_d());
  const CMatrix j = template_choi(n, td);
  QMatrix q(j.rows(), j.cols());
  for (Eigen::Index r = 0; r < j.rows(); r++)
    for (Eigen::Index c = 0; c < j.cols(); c++) {
      if (std::abs(j(r, c).imag()) > 1e-9)
        throw synthesis_error("assemble_choi_from_template: complex entry");
      const Rational v = rationalize(j(r, c).real());
      if (std::abs(v.get_d() - j(r, c).real()) > 1e-9)
        throw synthesis_error("assemble_choi_from_template: entry is not a small rational");
      q(r, c) = v;
    }
  return q;
}

} // namespace qmv
