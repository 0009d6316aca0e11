/**
 * Copyright 2026, the qmv authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

/**
 * @file    channels.hpp
 * @brief   The two extremal covariant channels C^{l+1} -> C^2 (partial trace and
 *          universal NOT) as Choi, Kraus, Stinespring and gate-level objects
 */

#pragma once

#include <string>
#include <vector>

#include <gsl/gsl_integration.h>

#include "qmv/cg.hpp"

namespace qmv {

enum class Extremal { tr, unot };

inline std::string to_string(Extremal e) { return e == Extremal::tr ? "tr" : "unot"; }

//============================================================================
// Choi / Kraus / Stinespring
//============================================================================

inline CMatrix extremal_choi(int l, Extremal which) {
  const CMatrix d = dual_cg_transform(l).matrix;
  Eigen::VectorXcd diag = Eigen::VectorXcd::Zero(2 * l + 2);
  if (which == Extremal::tr)
    diag.head(l).setConstant(double(l + 1) / l);
  else
    diag.tail(l + 2).setConstant(double(l + 1) / (l + 2));
  return d.adjoint() * diag.asDiagonal() * d;
}

inline std::vector<CMatrix> extremal_kraus(int l, Extremal which) {
  if (l < 1)
    throw std::invalid_argument("extremal_kraus: l must be >= 1");
  std::vector<CMatrix> ks;
  if (which == Extremal::tr) {
    for (int v = 0; v < l; v++) {
      CMatrix k = CMatrix::Zero(2, l + 1);
      k(0, v) = std::sqrt(double(l - v) / l);
      k(1, v + 1) = std::sqrt(double(v + 1) / l);
      ks.push_back(k);
    }
  } else {
    for (int w = 0; w < l + 2; w++) {
      CMatrix k = CMatrix::Zero(2, l + 1);
      if (w >= 1)
        k(0, w - 1) = -std::sqrt(double(w) / (l + 2));
      if (w <= l)
        k(1, w) = std::sqrt(double(l + 1 - w) / (l + 2));
      ks.push_back(k);
    }
  }
  return ks;
}

// Isometry into C^2 (x) C^env, output qubit first.
inline CMatrix extremal_stinespring(int l, Extremal which) {
  if (l < 1)
    throw std::invalid_argument("extremal_stinespring: l must be >= 1");
  if (which == Extremal::tr) {
    CMatrix u = CMatrix::Zero(2 * l, l + 1);
    for (int v = 0; v <= l; v++) {
      if (v < l)
        u(0 * l + v, v) = std::sqrt(double(l - v) / l);
      if (v >= 1)
        u(1 * l + v - 1, v) = std::sqrt(double(v) / l);
    }
    return u;
  }
  const int e = l + 2;
  CMatrix u = CMatrix::Zero(2 * e, l + 1);
  for (int w = 0; w <= l; w++) {
    u(0 * e + w + 1, w) = -std::sqrt(double(w + 1) / (l + 2));
    u(1 * e + w, w) = std::sqrt(double(l + 1 - w) / (l + 2));
  }
  return u;
}

inline CMatrix stinespring_apply(const CMatrix &u, const CMatrix &rho, size_t d_out) {
  const size_t env = static_cast<size_t>(u.rows()) / d_out;
  return partial_trace(CMatrix(u * rho * u.adjoint()), d_out, env, Subsystem::second);
}

// Closed-form action on an (l+1)-dim operator.
inline CMatrix apply_extremal(int l, Extremal which, const CMatrix &rho) {
  if (l < 1)
    throw std::invalid_argument("apply_extremal: l must be >= 1");
  if (rho.rows() != l + 1 || rho.cols() != l + 1)
    throw dimension_error("apply_extremal: input must be (l+1)-dimensional");
  CMatrix out = CMatrix::Zero(2, 2);
  if (which == Extremal::tr) {
    const double L = l;
    for (int w = 0; w <= l; w++) {
      out(0, 0) += rho(w, w) * ((L - w) / L);
      out(1, 1) += rho(w, w) * (w / L);
      if (w + 1 <= l) {
        // |w><w+1| and |w+1><w|
        out(0, 1) += rho(w, w + 1) * (std::sqrt((L - w) * (w + 1)) / L);
        out(1, 0) += rho(w + 1, w) * (std::sqrt((L - w) * (w + 1)) / L);
      }
    }
    return out;
  }
  const double L2 = l + 2;
  for (int w = 0; w <= l; w++) {
    out(0, 0) += rho(w, w) * ((w + 1) / L2);
    out(1, 1) += rho(w, w) * ((l + 1 - w) / L2);
    if (w + 1 <= l) {
      const double c = std::sqrt(double(l - w) * (w + 1)) / L2;
      out(0, 1) -= rho(w, w + 1) * c;
      out(1, 0) -= rho(w + 1, w) * c;
    }
  }
  return out;
}

//============================================================================
// Gate-level circuits. The working space is qubit (x) register.
//============================================================================

struct Gate {
  enum class Kind { prepare, embed, cond_rotation, controlled_shift, discard };
  Kind kind;
  // prepare: ancilla basis state
  int state = 0;
  // embed: register dims
  int from_dim = 0, to_dim = 0;
  // cond_rotation: apply R^order(v + offset) to the qubit when the register holds v
  int order = 0, offset = 0;
  // controlled_shift: register += shift (mod modulus) when the qubit holds control
  int control = 0, shift = 0, modulus = 0;
};

struct GateList {
  int l = 1;
  Extremal which = Extremal::tr;
  int input_dim = 2;
  std::vector<Gate> gates;
};

// R^L(v) = 1/sqrt(L) [[sqrt(L-v), -sqrt v], [sqrt v, sqrt(L-v)]]
inline Eigen::Matrix2d circuit_rotation(int order, int v) {
  if (v < 0 || v > order)
    throw std::out_of_range("circuit_rotation: v out of range");
  const double s = 1.0 / std::sqrt(double(order));
  const double a = std::sqrt(double(order - v)) * s, b = std::sqrt(double(v)) * s;
  Eigen::Matrix2d r;
  r << a, -b, b, a;
  return r;
}

inline GateList extremal_circuit(int l, Extremal which) {
  if (l < 1)
    throw std::invalid_argument("extremal_circuit: l must be >= 1");
  GateList c;
  c.l = l;
  c.which = which;
  c.input_dim = l + 1;
  using K = Gate::Kind;
  if (which == Extremal::tr) {
    c.gates.push_back({.kind = K::prepare, .state = 0});
    c.gates.push_back({.kind = K::cond_rotation, .order = l, .offset = 0});
    c.gates.push_back({.kind = K::controlled_shift, .control = 1, .shift = -1, .modulus = l + 1});
  } else {
    c.gates.push_back({.kind = K::prepare, .state = 1});
    c.gates.push_back({.kind = K::embed, .from_dim = l + 1, .to_dim = l + 2});
    c.gates.push_back({.kind = K::cond_rotation, .order = l + 2, .offset = 1});
    c.gates.push_back({.kind = K::controlled_shift, .control = 0, .shift = 1, .modulus = l + 2});
  }
  c.gates.push_back({.kind = K::discard});
  return c;
}

// Dense isometry input -> qubit (x) register; the trailing discard is left to
// the caller (see circuit_apply).
inline CMatrix compose_circuit(const GateList &c) {
  using K = Gate::Kind;
  CMatrix u = CMatrix::Identity(c.input_dim, c.input_dim);
  bool has_qubit = false;
  int reg = c.input_dim;
  for (const auto &g : c.gates) {
    switch (g.kind) {
    case K::prepare: {
      CMatrix ket = CMatrix::Zero(2, 1);
      ket(g.state, 0) = 1;
      u = kron(ket, CMatrix::Identity(reg, reg)) * u;
      has_qubit = true;
      break;
    }
    case K::embed: {
      if (g.from_dim != reg)
        throw dimension_error("compose_circuit: embed dimension mismatch");
      CMatrix e = CMatrix::Zero(g.to_dim, g.from_dim);
      e.topLeftCorner(g.from_dim, g.from_dim).setIdentity();
      u = kron(CMatrix::Identity(has_qubit ? 2 : 1, has_qubit ? 2 : 1), e) * u;
      reg = g.to_dim;
      break;
    }
    case K::cond_rotation: {
      CMatrix gm = CMatrix::Zero(2 * reg, 2 * reg);
      for (int v = 0; v < reg; v++) {
        const auto r = circuit_rotation(g.order, v + g.offset);
        for (int a = 0; a < 2; a++)
          for (int b = 0; b < 2; b++)
            gm(a * reg + v, b * reg + v) = r(a, b);
      }
      u = gm * u;
      break;
    }
    case K::controlled_shift: {
      if (g.modulus != reg)
        throw dimension_error("compose_circuit: shift modulus mismatch");
      CMatrix gm = CMatrix::Zero(2 * reg, 2 * reg);
      for (int a = 0; a < 2; a++)
        for (int v = 0; v < reg; v++) {
          const int s = a == g.control ? g.shift : 0;
          const int nv = ((v + s) % reg + reg) % reg;
          gm(a * reg + nv, a * reg + v) = 1;
        }
      u = gm * u;
      break;
    }
    case K::discard:
      break;
    }
  }
  return u;
}

inline CMatrix circuit_apply(const GateList &c, const CMatrix &rho) {
  return stinespring_apply(compose_circuit(c), rho, 2);
}

inline nlohmann::json to_json(const GateList &c) {
  using K = Gate::Kind;
  nlohmann::json gates = nlohmann::json::array();
  for (const auto &g : c.gates) {
    switch (g.kind) {
    case K::prepare:
      gates.push_back({{"kind", "prepare"}, {"target", "ancilla"}, {"state", g.state}});
      break;
    case K::embed:
      gates.push_back(
          {{"kind", "embed"}, {"target", "register"}, {"from", g.from_dim}, {"to", g.to_dim}});
      break;
    case K::cond_rotation:
      gates.push_back({{"kind", "cond_rotation"},
                       {"target", "ancilla"},
                       {"control", "register"},
                       {"order", g.order},
                       {"offset", g.offset}});
      break;
    case K::controlled_shift:
      gates.push_back({{"kind", g.shift > 0 ? "incrementer" : "decrementer"},
                       {"target", "register"},
                       {"control", "ancilla"},
                       {"control_value", g.control},
                       {"shift", g.shift},
                       {"modulus", g.modulus}});
      break;
    case K::discard:
      gates.push_back({{"kind", "discard"}, {"target", "register"}});
      break;
    }
  }
  return {{"l", c.l}, {"channel", to_string(c.which)}, {"input_dim", c.input_dim},
          {"gates", gates}};
}

//============================================================================
// Independent oracles
//============================================================================

// (l+1) \int <psi^l| rho |psi^l> (I - |psi><psi|) dpsi, Gauss-Legendre in
// cos(theta) times a uniform grid in phi.
inline CMatrix unot_integral_check(int l, const CMatrix &rho, int n_grid = 64) {
  if (n_grid < 8)
    throw std::invalid_argument("unot_integral_check: n_grid must be >= 8");
  if (rho.rows() != l + 1 || rho.cols() != l + 1)
    throw dimension_error("unot_integral_check: input must be (l+1)-dimensional");
  gsl_integration_glfixed_table *tab = gsl_integration_glfixed_table_alloc(n_grid);
  CMatrix out = CMatrix::Zero(2, 2);
  for (int i = 0; i < n_grid; i++) {
    double u = 0, wu = 0;
    gsl_integration_glfixed_point(-1.0, 1.0, i, &u, &wu, tab);
    for (int j = 0; j < n_grid; j++) {
      const double phi = 2 * M_PI * j / n_grid;
      CVector psi(2);
      psi << std::sqrt((1 + u) / 2), std::polar(std::sqrt((1 - u) / 2), phi);
      const CVector coh = coherent_state(l, psi);
      const double weight = wu * (2 * M_PI / n_grid) / (4 * M_PI);
      const complex_t amp = (coh.adjoint() * rho * coh)(0, 0);
      out += weight * amp * (CMatrix::Identity(2, 2) - psi * psi.adjoint());
    }
  }
  gsl_integration_glfixed_table_free(tab);
  return double(l + 1) * out;
}

// Tr_{2..l}[V rho V^dagger]
inline CMatrix partial_trace_channel(int l, const CMatrix &rho) {
  const CMatrix v = sym_isometry(l);
  const CMatrix big = v * rho * v.adjoint();
  return partial_trace(big, 2, size_t(1) << (l - 1), Subsystem::second);
}

} // namespace qmv
