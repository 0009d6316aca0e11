/**
 * Copyright 2026, the qmv authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

/**
 * @file    rep2.hpp
 * @brief   Irreps of GL(2): Wigner matrices, Q_lambda, Dicke and coherent states
 */

#pragma once

#include <vector>

#include "qmv/core.hpp"

namespace qmv {

// Two-row partition lambda = (lambda1, lambda2) of n.
struct Partition {
  int lambda1 = 0;
  int lambda2 = 0;

  Partition() = default;
  Partition(int l1, int l2) : lambda1(l1), lambda2(l2) {
    if (l2 < 0 || l1 < l2)
      throw std::invalid_argument("Partition: need lambda1 >= lambda2 >= 0");
  }

  int n() const { return lambda1 + lambda2; }
  int ell() const { return lambda1 - lambda2; }
  int r() const { return lambda2; }
  // Dimension of the unitary register.
  int m() const { return ell() + 1; }
  // Dimension of the permutation register, exact.
  Integer d_exact() const {
    Integer num = binomial(n(), lambda1) * (ell() + 1);
    return num / (lambda1 + 1);
  }
  long d() const { return d_exact().get_si(); }

  bool operator==(const Partition &o) const = default;
};

// Partitions of n ordered by lambda1 descending.
inline std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  for (int l2 = 0; 2 * l2 <= n; l2++)
    out.emplace_back(n - l2, l2);
  return out;
}

namespace detail {
inline complex_t ipow(complex_t z, int e) {
  complex_t r(1.0, 0.0);
  for (int i = 0; i < e; i++)
    r *= z;
  return r;
}
} // namespace detail

// T^l(M): action of M on degree-l homogeneous polynomials, basis x^{l-k} y^k.
inline CMatrix wigner_t(int l, const CMatrix &m) {
  if (l < 0)
    throw std::invalid_argument("wigner_t: negative l");
  if (m.rows() != 2 || m.cols() != 2)
    throw dimension_error("wigner_t: M must be 2x2");
  const complex_t a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  std::vector<Integer> fact(l + 1);
  for (int i = 0; i <= l; i++)
    fact[i] = factorial(i);
  CMatrix t = CMatrix::Zero(l + 1, l + 1);
  for (int j = 0; j <= l; j++)
    for (int k = 0; k <= l; k++) {
      Integer pre = fact[j] * fact[l - j] * fact[k] * fact[l - k];
      complex_t s = 0;
      for (int r = std::max(l - j - k, 0); r <= std::min(l - j, l - k); r++) {
        Integer den = fact[r] * fact[l - j - r] * fact[l - k - r] * fact[j + k + r - l];
        Rational coef2(pre, den * den);
        double coef = std::sqrt(coef2.get_d());
        s += coef * detail::ipow(a, r) * detail::ipow(b, l - j - r) * detail::ipow(c, l - k - r) *
             detail::ipow(d, j + k + r - l);
      }
      t(j, k) = s;
    }
  return t;
}

inline complex_t det2(const CMatrix &m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

// Q_lambda(M) = det(M)^{lambda2} T^{lambda1-lambda2}(M).
inline CMatrix q_lambda(const Partition &p, const CMatrix &m) {
  return detail::ipow(det2(m), p.lambda2) * wigner_t(p.ell(), m);
}

// Uniform superposition of l-bit strings with Hamming weight w; qubit 1 is the
// most significant bit of the index.
inline CVector dicke_state(int l, int w) {
  if (w < 0 || w > l)
    throw std::out_of_range("dicke_state: weight out of range");
  CVector v = CVector::Zero(size_t(1) << l);
  const double amp = 1.0 / std::sqrt(binomial(l, w).get_d());
  for (size_t x = 0; x < v.size(); x++)
    if (__builtin_popcountll(x) == w)
      v(x) = amp;
  return v;
}

// V^l = sum_k |s_l(k)><k|
inline CMatrix sym_isometry(int l) {
  CMatrix v(size_t(1) << l, l + 1);
  for (int k = 0; k <= l; k++)
    v.col(k) = dicke_state(l, k);
  return v;
}

// psi^l_k = sqrt(C(l,k)) a^{l-k} c^k for psi = (a, c).
inline CVector coherent_state(int l, const CVector &psi) {
  if (psi.size() != 2)
    throw dimension_error("coherent_state: psi must be a qubit vector");
  CVector v(l + 1);
  for (int k = 0; k <= l; k++)
    v(k) = std::sqrt(binomial(l, k).get_d()) * detail::ipow(psi(0), l - k) *
           detail::ipow(psi(1), k);
  return v;
}

inline CMatrix sym_projector(int l) {
  CMatrix v = sym_isometry(l);
  return v * v.adjoint();
}

// psi^{(x) l}
inline CVector tensor_power_state(const CVector &psi, int l) {
  CVector v = CVector::Ones(1);
  for (int i = 0; i < l; i++) {
    CVector nv(v.size() * psi.size());
    for (Eigen::Index a = 0; a < v.size(); a++)
      nv.segment(a * psi.size(), psi.size()) = v(a) * psi;
    v = nv;
  }
  return v;
}

inline CMatrix tensor_power(const CMatrix &m, int l) {
  CMatrix r = CMatrix::Identity(1, 1);
  for (int i = 0; i < l; i++)
    r = kron(r, m);
  return r;
}

} // namespace qmv
