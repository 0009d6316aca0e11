/**
 * Copyright 2026, the qmv authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

/**
 * @file    schur.hpp
 * @brief   Explicit Schur basis for n qubits, weak Schur sampling (Gamma) and
 *          its inverse
 */

#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "qmv/rep2.hpp"

namespace qmv {

constexpr int kMaxSchurQubits = 8;

using Permutation = std::vector<int>; // 0-based images: i -> pi[i]

inline bool is_permutation(const Permutation &pi) {
  std::vector<int> s(pi);
  std::sort(s.begin(), s.end());
  for (size_t i = 0; i < s.size(); i++)
    if (s[i] != int(i))
      return false;
  return true;
}

// Basis index of P(pi)|x>: the bit of qubit i moves to position pi[i].
// Qubit 0 is the most significant bit.
inline size_t permute_index(int n, const Permutation &pi, size_t x) {
  size_t y = 0;
  for (int i = 0; i < n; i++)
    if ((x >> (n - 1 - i)) & 1)
      y |= size_t(1) << (n - 1 - pi[i]);
  return y;
}

inline CVector apply_permutation(int n, const Permutation &pi, const CVector &v) {
  CVector r(v.size());
  for (size_t x = 0; x < size_t(v.size()); x++)
    r(permute_index(n, pi, x)) = v(x);
  return r;
}

inline CMatrix permutation_matrix(int n, const Permutation &pi) {
  if (int(pi.size()) != n || !is_permutation(pi))
    throw std::invalid_argument("permutation_matrix: invalid permutation");
  const size_t dim = size_t(1) << n;
  CMatrix p = CMatrix::Zero(dim, dim);
  for (size_t x = 0; x < dim; x++)
    p(permute_index(n, pi, x), x) = 1;
  return p;
}

inline CVector singlet() {
  CVector s = CVector::Zero(4);
  s(1) = 1 / std::sqrt(2.0);
  s(2) = -1 / std::sqrt(2.0);
  return s;
}

// |s_l(w)> (x) |Psi->^{(x) lambda2}
inline CVector base_vector(const Partition &p, int w) {
  if (w < 0 || w > p.ell())
    throw std::out_of_range("base_vector: w out of range");
  CVector v = dicke_state(p.ell(), w);
  const CVector s = singlet();
  for (int k = 0; k < p.lambda2; k++) {
    CVector nv(v.size() * 4);
    for (Eigen::Index a = 0; a < v.size(); a++)
      nv.segment(a * 4, 4) = v(a) * s;
    v = nv;
  }
  return v;
}

struct SchurBlock {
  Partition lambda;
  int m = 0;
  int d = 0;
  int row_offset = 0;
  std::vector<Permutation> perms; // accepted permutations
  Eigen::MatrixXd alpha;          // d x perms.size(), shared by every w
};

struct SchurBasis {
  int n = 0;
  std::vector<SchurBlock> blocks; // lambda1 descending
  CMatrix u_sch;                  // rows <(lambda,w,i)|, row = offset + w*d + i

  CVector vector(size_t block, int w, int i) const {
    return u_sch.row(blocks[block].row_offset + w * blocks[block].d + i).adjoint();
  }
  // Rows of U_Sch belonging to one block, shape (m*d) x 2^n.
  auto block_rows(size_t b) const {
    const auto &bl = blocks[b];
    return u_sch.middleRows(bl.row_offset, bl.m * bl.d);
  }
};

namespace detail {
inline SchurBasis construct_schur_basis(int n) {
  SchurBasis sb;
  sb.n = n;
  const size_t dim = size_t(1) << n;
  sb.u_sch = CMatrix::Zero(dim, dim);
  int offset = 0;
  for (const auto &lam : partitions(n)) {
    SchurBlock bl;
    bl.lambda = lam;
    bl.m = lam.m();
    bl.d = int(lam.d());
    bl.row_offset = offset;
    const CVector v0 = base_vector(lam, 0);
    // Modified Gram-Schmidt over P(pi)|(lambda,0,0)>, lexicographic pi.
    std::vector<CVector> ortho;
    std::vector<Eigen::VectorXd> coeffs; // over accepted perms
    Permutation pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    do {
      CVector u = apply_permutation(n, pi, v0);
      const size_t k = bl.perms.size();
      Eigen::VectorXd c = Eigen::VectorXd::Zero(k + 1);
      c(k) = 1;
      for (size_t j = 0; j < ortho.size(); j++) {
        const complex_t ip = ortho[j].dot(u);
        u -= ip * ortho[j];
        c.head(k) -= ip.real() * coeffs[j];
      }
      const double nrm = u.norm();
      if (nrm < 1e-8)
        continue;
      bl.perms.push_back(pi);
      for (auto &cj : coeffs)
        cj.conservativeResize(k + 1), cj(k) = 0;
      ortho.push_back(u / nrm);
      coeffs.push_back(c / nrm);
    } while (int(ortho.size()) < bl.d && std::next_permutation(pi.begin(), pi.end()));
    if (int(ortho.size()) != bl.d)
      throw std::logic_error("build_schur_basis: permutation span has wrong dimension");
    bl.alpha = Eigen::MatrixXd(bl.d, bl.perms.size());
    for (int i = 0; i < bl.d; i++)
      bl.alpha.row(i) = coeffs[i].transpose();
    // Same coefficients at every w.
    for (int w = 0; w < bl.m; w++) {
      const CVector vw = base_vector(lam, w);
      std::vector<CVector> pv;
      for (const auto &p : bl.perms)
        pv.push_back(apply_permutation(n, p, vw));
      for (int i = 0; i < bl.d; i++) {
        CVector e = CVector::Zero(dim);
        for (size_t j = 0; j < pv.size(); j++)
          e += bl.alpha(i, j) * pv[j];
        sb.u_sch.row(offset + w * bl.d + i) = e.adjoint();
      }
    }
    offset += bl.m * bl.d;
    sb.blocks.push_back(std::move(bl));
  }
  return sb;
}
} // namespace detail

// Built once per n and shared; the result is immutable.
inline std::shared_ptr<const SchurBasis> build_schur_basis(int n) {
  if (n < 1 || n > kMaxSchurQubits)
    throw std::out_of_range("build_schur_basis: n must be in [1, 8]");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const SchurBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end())
    return it->second;
  auto sb = std::make_shared<const SchurBasis>(detail::construct_schur_basis(n));
  cache.emplace(n, sb);
  return sb;
}

inline nlohmann::json to_json(const SchurBasis &sb) {
  nlohmann::json manifest = nlohmann::json::array();
  for (const auto &b : sb.blocks)
    manifest.push_back({b.lambda.lambda1, b.lambda.lambda2, b.m, b.d, b.row_offset});
  nlohmann::json j = to_json(sb.u_sch);
  j["n"] = sb.n;
  j["blocks"] = manifest;
  return j;
}

// (C(n,l2) - C(n,l2-1)) / C(n,h) when l2 <= min(h, n-h), else 0.
inline Rational outcome_probability(int n, int lambda2, int h) {
  if (h < 0 || h > n || lambda2 < 0 || 2 * lambda2 > n)
    throw std::out_of_range("outcome_probability: argument out of range");
  if (lambda2 > std::min(h, n - h))
    return 0;
  Rational p(binomial(n, lambda2) - binomial(n, lambda2 - 1), binomial(n, h));
  p.canonicalize();
  return p;
}

struct PreprocessOutcome {
  Partition partition;
  double probability = 0;
  CMatrix state; // m_lambda x m_lambda
};

// Unnormalized per-block image: Tr_perm[Pi_lambda U rho U^dagger Pi_lambda].
inline std::vector<CMatrix> preprocess_linear(const SchurBasis &sb, const CMatrix &x) {
  const size_t dim = size_t(1) << sb.n;
  if (size_t(x.rows()) != dim || size_t(x.cols()) != dim)
    throw dimension_error("preprocess: input dimension mismatch");
  std::vector<CMatrix> out;
  for (size_t b = 0; b < sb.blocks.size(); b++) {
    const auto &bl = sb.blocks[b];
    const auto rows = sb.block_rows(b);
    const CMatrix s = rows * x * rows.adjoint();
    out.push_back(partial_trace(s, bl.m, bl.d, Subsystem::second));
  }
  return out;
}

inline std::vector<PreprocessOutcome> preprocess(int n, const CMatrix &rho) {
  const auto sb = build_schur_basis(n);
  const auto blocks = preprocess_linear(*sb, rho);
  std::vector<PreprocessOutcome> out;
  for (size_t b = 0; b < blocks.size(); b++) {
    const double p = blocks[b].trace().real();
    if (p <= 1e-12)
      continue;
    out.push_back({sb->blocks[b].lambda, p, blocks[b] / p});
  }
  return out;
}

inline CMatrix preprocess_inverse(int n, const std::vector<PreprocessOutcome> &outcomes) {
  const auto sb = build_schur_basis(n);
  double total = 0;
  for (const auto &o : outcomes)
    total += o.probability;
  if (std::abs(total - 1) > 1e-10)
    throw std::invalid_argument("preprocess_inverse: probabilities do not sum to 1");
  const size_t dim = size_t(1) << n;
  CMatrix inner = CMatrix::Zero(dim, dim);
  for (const auto &o : outcomes) {
    auto it = std::find_if(sb->blocks.begin(), sb->blocks.end(),
                           [&](const SchurBlock &b) { return b.lambda == o.partition; });
    if (it == sb->blocks.end() || o.state.rows() != it->m)
      throw dimension_error("preprocess_inverse: outcome does not match a block");
    const CMatrix blk =
        o.probability * kron(o.state, CMatrix::Identity(it->d, it->d) / double(it->d));
    inner.block(it->row_offset, it->row_offset, blk.rows(), blk.cols()) = blk;
  }
  return sb->u_sch.adjoint() * inner * sb->u_sch;
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  do
    out.push_back(pi);
  while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

// Theta: average of P(pi) rho P(pi)^dagger over S_n.
inline CMatrix symmetrize(int n, const CMatrix &rho) {
  const size_t dim = size_t(1) << n;
  CMatrix out = CMatrix::Zero(dim, dim);
  const auto perms = all_permutations(n);
  for (const auto &pi : perms) {
    std::vector<size_t> idx(dim);
    for (size_t x = 0; x < dim; x++)
      idx[x] = permute_index(n, pi, x);
    for (size_t x = 0; x < dim; x++)
      for (size_t y = 0; y < dim; y++)
        out(idx[x], idx[y]) += rho(x, y);
  }
  return out / double(perms.size());
}

// |x> for an n-bit string given with qubit 1 first.
inline CVector basis_state(const std::string &bits) {
  CVector v = CVector::Zero(size_t(1) << bits.size());
  size_t x = 0;
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("basis_state: not a bitstring");
    x = (x << 1) | size_t(c == '1');
  }
  v(x) = 1;
  return v;
}

} // namespace qmv
