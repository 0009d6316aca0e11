/**
 * Copyright 2026, the qmv authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

/**
 * @file    sim.hpp
 * @brief   Density-matrix simulation of the template algorithm
 */

#pragma once

#include <random>

#include "qmv/channels.hpp"
#include "qmv/fidopt.hpp"
#include "qmv/schur.hpp"

namespace qmv {

constexpr std::uint64_t kDefaultSeed = 20240611;

using Rng = std::mt19937_64;

// Haar-random U(2): QR of a complex Gaussian matrix with R's diagonal phases
// moved into Q.
inline CMatrix haar_unitary(Rng &rng, int dim = 2) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix z(dim, dim);
  for (int i = 0; i < dim; i++)
    for (int j = 0; j < dim; j++)
      z(i, j) = complex_t(g(rng), g(rng)) / std::sqrt(2.0);
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; i++) {
    const complex_t d = r(i, i);
    q.col(i) *= d / std::abs(d);
  }
  return q;
}

inline CMatrix random_gaussian_matrix(Rng &rng, int rows, int cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix z(rows, cols);
  for (int i = 0; i < rows; i++)
    for (int j = 0; j < cols; j++)
      z(i, j) = complex_t(g(rng), g(rng));
  return z;
}

// Full-rank random state G G^dagger / Tr.
inline CMatrix random_density(Rng &rng, int dim) {
  const CMatrix g = random_gaussian_matrix(rng, dim, dim);
  CMatrix rho = g * g.adjoint();
  return rho / rho.trace();
}

// Which representation of the extremal channels is used inside a run.
enum class ChannelPath { closed_form, kraus, circuit };

inline CMatrix apply_block(int l, Extremal which, const CMatrix &rho, ChannelPath path) {
  switch (path) {
  case ChannelPath::kraus:
    return kraus_apply(extremal_kraus(l, which), rho);
  case ChannelPath::circuit:
    return circuit_apply(extremal_circuit(l, which), rho);
  default:
    return apply_extremal(l, which, rho);
  }
}

inline std::vector<double> to_doubles(const std::vector<Rational> &v) {
  std::vector<double> d;
  for (const auto &x : v)
    d.push_back(x.get_d());
  return d;
}

// sum_lambda p_lambda [t_k Phi_Tr + (1 - t_k) Phi_UNOT](post-state), k = lambda2.
inline CMatrix run_template(int n, const std::vector<double> &t, const CMatrix &rho,
                            ChannelPath path = ChannelPath::closed_form) {
  if (int(t.size()) != n / 2 + 1)
    throw std::invalid_argument("run_template: t has the wrong length");
  CMatrix out = CMatrix::Zero(2, 2);
  for (const auto &o : preprocess(n, rho)) {
    const int l = o.partition.ell();
    if (l == 0)
      throw std::logic_error("run_template: l = 0 block for odd n");
    const double tk = t[o.partition.lambda2];
    out += o.probability * (tk * apply_block(l, Extremal::tr, o.state, path) +
                            (1 - tk) * apply_block(l, Extremal::unot, o.state, path));
  }
  return out;
}

inline CMatrix weight_input(int n, int h) {
  const CVector x = basis_state(std::string(n - h, '0') + std::string(h, '1'));
  return x * x.adjoint();
}

inline CVector output_ket(int bit) {
  CVector v = CVector::Zero(2);
  v(bit) = 1;
  return v;
}

struct TemplateRun {
  int n = 1;
  std::vector<double> t;
  std::vector<double> per_weight_fidelity_sim;
  double worst_case = 0;
  double max_trace_error = 0;
};

inline TemplateRun simulate_template(int n, const BoolFn &f, const std::vector<double> &t,
                                     ChannelPath path = ChannelPath::closed_form) {
  TemplateRun run;
  run.n = n;
  run.t = t;
  for (int h = 0; h <= n / 2; h++) {
    const CMatrix out = run_template(n, t, weight_input(n, h), path);
    run.max_trace_error = std::max(run.max_trace_error, std::abs(out.trace() - 1.0));
    run.per_weight_fidelity_sim.push_back(fidelity(output_ket(f.bar(h)), out));
  }
  run.worst_case = *std::min_element(run.per_weight_fidelity_sim.begin(),
                                     run.per_weight_fidelity_sim.end());
  return run;
}

inline double worst_case_fidelity_sim(int n, const BoolFn &f, const std::vector<double> &t) {
  return simulate_template(n, f, t).worst_case;
}

// max ||A(U^n P|x><x|P^dag U^n^dag) - U A(|x><x|) U^dag||_max over random trials
inline double equivariance_check(int n, const std::vector<double> &t, int trials, Rng &rng) {
  std::uniform_int_distribution<size_t> xs(0, (size_t(1) << n) - 1);
  double worst = 0;
  for (int trial = 0; trial < trials; trial++) {
    const CMatrix u = haar_unitary(rng);
    const size_t x = xs(rng);
    Permutation pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    std::shuffle(pi.begin(), pi.end(), rng);
    CVector ket = CVector::Zero(size_t(1) << n);
    ket(x) = 1;
    const CVector moved = tensor_power(u, n) * apply_permutation(n, pi, ket);
    const CMatrix lhs = run_template(n, t, moved * moved.adjoint());
    const CMatrix rhs = u * run_template(n, t, ket * ket.adjoint()) * u.adjoint();
    worst = std::max(worst, max_abs_diff(lhs, rhs));
  }
  return worst;
}

struct HaarEstimate {
  double mean = 0;
  double stderr_ = 0;
  // largest sample variance over U at a fixed input weight
  double max_variance = 0;
};

// Average output fidelity over Haar-random bases, for each weight h.
inline HaarEstimate haar_average_fidelity(int n, const BoolFn &f, const std::vector<double> &t,
                                          int samples, Rng &rng) {
  if (samples < 1)
    throw std::invalid_argument("haar_average_fidelity: need at least one sample");
  std::vector<std::vector<double>> fid(n / 2 + 1);
  for (int s = 0; s < samples; s++) {
    const CMatrix u = haar_unitary(rng);
    const CMatrix un = tensor_power(u, n);
    for (int h = 0; h <= n / 2; h++) {
      const CMatrix rho = un * weight_input(n, h) * un.adjoint();
      const CMatrix out = run_template(n, t, rho);
      const CVector target = u * output_ket(f.bar(h));
      fid[h].push_back(fidelity(target, out));
    }
  }
  HaarEstimate e;
  std::vector<double> all;
  for (const auto &row : fid) {
    double m = 0;
    for (double v : row)
      m += v;
    m /= row.size();
    double var = 0;
    for (double v : row)
      var += (v - m) * (v - m);
    var = row.size() > 1 ? var / (row.size() - 1) : 0;
    e.max_variance = std::max(e.max_variance, var);
    all.insert(all.end(), row.begin(), row.end());
  }
  double m = 0;
  for (double v : all)
    m += v;
  m /= all.size();
  double var = 0;
  for (double v : all)
    var += (v - m) * (v - m);
  var = all.size() > 1 ? var / (all.size() - 1) : 0;
  e.mean = m;
  e.stderr_ = std::sqrt(var / all.size());
  return e;
}

} // namespace qmv
