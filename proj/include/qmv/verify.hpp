/**
 * Copyright 2026, the qmv authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

/**
 * @file    verify.hpp
 * @brief   End-to-end verification suite shared by the acceptance test and the
 *          CLI `verify` command
 */

#pragma once

#include <chrono>
#include <functional>
#include <future>
#include <sstream>
#include <thread>

#include "qmv/choi_synth.hpp"
#include "qmv/golden.hpp"
#include "qmv/sim.hpp"

namespace qmv {

enum class VerifyLevel { quick, full };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::full;
  std::uint64_t seed = kDefaultSeed;
  // Harness self-test: perturb one reference value so that a check must fail.
  bool inject_fault = false;
};

struct CheckResult {
  std::string id;
  std::string name;
  bool passed = false;
  bool blocking = true;
  double seconds = 0;
  double time_limit = 0; // 0: none
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool ok() const {
    for (const auto &c : checks)
      if (c.blocking && !c.passed)
        return false;
    return true;
  }
};

namespace verify_detail {

struct Ctx {
  VerifyOptions opt;
  int max_n() const { return opt.level == VerifyLevel::quick ? 5 : 7; }
  int max_schur_n() const { return opt.level == VerifyLevel::quick ? 5 : 6; }
};

// Collects sub-results of a check.
class Acc {
public:
  void expect(bool ok, const std::string &what) {
    if (!ok) {
      ok_ = false;
      if (failures_++ < 5)
        msg_ << (msg_.tellp() > 0 ? "; " : "") << what;
    }
  }
  void bound(double value, double tol, const std::string &what) {
    worst_ = std::max(worst_, value);
    std::ostringstream s;
    s << what << " = " << value << " > " << tol;
    expect(value <= tol, s.str());
  }
  void note(const std::string &s) { notes_ << (notes_.tellp() > 0 ? "; " : "") << s; }
  bool ok() const { return ok_; }
  std::string detail() const {
    std::ostringstream s;
    if (!ok_)
      s << msg_.str() << (failures_ > 5 ? " (+" + std::to_string(failures_ - 5) + " more)" : "");
    else
      s << notes_.str();
    return s.str();
  }

private:
  bool ok_ = true;
  int failures_ = 0;
  double worst_ = 0;
  std::ostringstream msg_, notes_;
};

inline std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

inline std::vector<Rational> parse_all(const std::vector<std::string> &v) {
  std::vector<Rational> r;
  for (const auto &s : v)
    r.push_back(parse_rational(s));
  return r;
}

// 1. Exact optimal fidelity, t and c for n <= 3.
inline void check_table3(const Ctx &ctx, Acc &acc) {
  for (auto row : golden::optimal_rows()) {
    if (ctx.opt.inject_fault && row.name == "MAJ3")
      row.fidelity = "889/1000";
    const auto f = BoolFn::from_table(row.table);
    const auto s = solve_lp(f.n(), f);
    acc.expect(s.fidelity == parse_rational(row.fidelity),
               row.name + ": F = " + to_string(s.fidelity) + ", expected " + row.fidelity);
    acc.expect(s.t == parse_all(row.t), row.name + ": t mismatch");
    acc.expect(s.per_weight == parse_all(row.c), row.name + ": c mismatch");
  }
  acc.note(std::to_string(golden::optimal_rows().size()) + " rows exact");
}

// 2. Optimal fidelity of every function with n <= 7.
inline void check_sweep(const Ctx &ctx, Acc &acc) {
  int count = 0;
  for (const auto &[table, value] : golden::sweep()) {
    const int n = 2 * int(table.size()) - 1;
    if (n > ctx.max_n())
      continue;
    const auto f = BoolFn::from_table(table);
    const auto s = solve_lp(n, f);
    acc.expect(s.fidelity == parse_rational(value),
               table + ": F = " + to_string(s.fidelity) + ", expected " + value);
    count++;
  }
  // Suffix pattern for n = 7.
  if (ctx.max_n() >= 7)
    for (const auto &f : all_functions(7)) {
      const auto t = f.table();
      const auto F = solve_lp(7, f).fidelity;
      if (t.substr(2) == "10")
        acc.expect(F == make_rational(2, 3), t + ": suffix 10 should give 2/3");
      if (t.substr(2) == "01")
        acc.expect(F == make_rational(5, 9), t + ": suffix 01 should give 5/9");
    }
  acc.note(std::to_string(count) + " functions exact");
}

// 3. Majority: recursion = LP = reference, odd n <= 21.
inline void check_majority(const Ctx &, Acc &acc) {
  const auto &ref = golden::majority_sequence();
  for (size_t i = 0; i < ref.size(); i++) {
    const int n = 2 * int(i) + 1;
    const auto g = majority_fidelity_recursive(n);
    const auto lp = solve_lp(n, BoolFn::majority(n)).fidelity;
    acc.expect(g == lp, "n=" + std::to_string(n) + ": recursion " + to_string(g) + " != LP " +
                            to_string(lp));
    acc.expect(g == parse_rational(ref[i]), "n=" + std::to_string(n) + ": " + to_string(g) +
                                                " != reference " + ref[i]);
  }
  const auto &dec = golden::majority_decimals();
  for (size_t i = 0; i < dec.size(); i++) {
    const double v = majority_fidelity_recursive(2 * int(i) + 1).get_d();
    acc.expect(std::abs(v - std::stod(dec[i])) <= 5e-7,
               "n=" + std::to_string(2 * i + 1) + ": decimal " + dec[i]);
  }
  acc.note("odd n <= 21 exact, n=21 -> " + ref.back() + ", six-place decimals agree");
}

// 4. Scaling windows at n in {101, 501, 1001}.
inline void check_asymptotics(const Ctx &, Acc &acc) {
  std::ostringstream s;
  for (int n : {101, 501, 1001}) {
    const int hp = n / 6;
    const Rational F = majority_fidelity_recursive(n);
    const Rational Fd = majority_fidelity_direct(n, (n - 1) / 2);
    const Rational Fp = majority_fidelity_promise(n, hp);
    acc.expect(F == Fd, "n=" + std::to_string(n) + ": recursion and direct sum disagree");
    acc.expect(Fp == majority_fidelity_direct(n, hp),
               "n=" + std::to_string(n) + ": promise chain and direct sum disagree");
    const double a = (F.get_d() - 0.5) * std::sqrt(double(n));
    const double b = n * (1 - Fp.get_d());
    acc.expect(a >= 0.1 && a <= 10, "n=" + std::to_string(n) + ": (F-1/2)sqrt(n) = " + fmt(a));
    acc.expect(b >= 0.1 && b <= 10, "n=" + std::to_string(n) + ": n(1-F) = " + fmt(b));
    s << "n=" << n << ": " << fmt(a) << ", " << fmt(b) << " ";
  }
  // The closed forms are the LP optimum; confirm at n = 101.
  const int n = 101;
  std::set<int> W;
  for (int h = 0; h <= n / 6; h++)
    W.insert(h);
  acc.expect(solve_lp(n, BoolFn::majority(n)).fidelity == majority_fidelity_recursive(n),
             "n=101: LP disagrees with closed form");
  acc.expect(solve_lp(n, BoolFn::majority(n), W).fidelity == majority_fidelity_promise(n, n / 6),
             "n=101: promise LP disagrees with closed form");
  acc.note(s.str() + "| LP cross-check at n=101");
}

// 5. Extremal channels in all four representations, l <= 10.
inline void check_extremal(const Ctx &ctx, Acc &acc) {
  Rng rng(ctx.opt.seed + 5);
  double rel = 0, rep = 0, kraus_choi = 0, circ = 0;
  for (int l = 1; l <= 10; l++) {
    const CMatrix jt = extremal_choi(l, Extremal::tr), ju = extremal_choi(l, Extremal::unot);
    const int D = 2 * (l + 1);
    rel = std::max(rel, max_abs_diff(double(l) * jt + double(l + 2) * ju,
                                     double(l + 1) * CMatrix::Identity(D, D)));
    for (auto which : {Extremal::tr, Extremal::unot}) {
      const CMatrix j = which == Extremal::tr ? jt : ju;
      const auto ks = extremal_kraus(l, which);
      const CMatrix u = extremal_stinespring(l, which);
      const auto circuit = extremal_circuit(l, which);
      kraus_choi = std::max(kraus_choi, max_abs_diff(choi_from_kraus(ks), j));
      // Circuit isometry against the Stinespring isometry (Tr: the register has
      // one extra level that is never populated).
      const CMatrix cu = compose_circuit(circuit);
      if (which == Extremal::unot) {
        circ = std::max(circ, max_abs_diff(cu, u));
      } else {
        CMatrix emb = CMatrix::Zero(2 * (l + 1), l + 1);
        for (int a = 0; a < 2; a++)
          emb.middleRows(a * (l + 1), l) = u.middleRows(a * l, l);
        circ = std::max(circ, max_abs_diff(cu, emb));
      }
      for (int trial = 0; trial < 5; trial++) {
        const CMatrix rho = random_density(rng, l + 1);
        const CMatrix ref = choi_apply(j, rho, 2, l + 1);
        rep = std::max(rep, max_abs_diff(kraus_apply(ks, rho), ref));
        rep = std::max(rep, max_abs_diff(stinespring_apply(u, rho, 2), ref));
        rep = std::max(rep, max_abs_diff(circuit_apply(circuit, rho), ref));
        rep = std::max(rep, max_abs_diff(apply_extremal(l, which, rho), ref));
      }
    }
  }
  acc.bound(rel, 1e-10, "l J_Tr + (l+2) J_UNOT - (l+1) I");
  acc.bound(kraus_choi, 1e-10, "Kraus-assembled Choi deviation");
  acc.bound(circ, 1e-10, "circuit vs Stinespring");
  acc.bound(rep, 1e-10, "representation disagreement");
  // l = 1 exact forms after rationalization.
  for (auto which : {Extremal::tr, Extremal::unot}) {
    const CMatrix j = extremal_choi(1, which);
    QMatrix q(4, 4);
    for (int r = 0; r < 4; r++)
      for (int c = 0; c < 4; c++)
        q(r, c) = rationalize(j(r, c).real());
    const QMatrix ref = which == Extremal::tr ? golden::extremal_l1_tr() : golden::extremal_l1_unot();
    acc.expect(q == ref, "l=1 " + to_string(which) + " Choi matrix differs");
  }
  acc.note("relation " + fmt(rel) + ", reps " + fmt(rep) + ", circuit " + fmt(circ));
}

// 6. Clebsch-Gordan decompositions, l <= 10.
inline void check_cg(const Ctx &ctx, Acc &acc) {
  Rng rng(ctx.opt.seed + 6);
  double err = 0, derr = 0, orth = 0;
  for (int l = 1; l <= 10; l++) {
    const CMatrix c = cg_transform(l).matrix, d = dual_cg_transform(l).matrix;
    const int D = 2 * l + 2;
    orth = std::max(orth, max_abs_diff(c * c.adjoint(), CMatrix::Identity(D, D)));
    orth = std::max(orth, max_abs_diff(d * d.adjoint(), CMatrix::Identity(D, D)));
    for (int trial = 0; trial < 10; trial++) {
      CMatrix m = trial < 5 ? haar_unitary(rng) : random_gaussian_matrix(rng, 2, 2);
      while (std::abs(det2(m)) < 1e-6)
        m = random_gaussian_matrix(rng, 2, 2);
      const CMatrix lhs = c * kron(m, wigner_t(l, m)) * c.adjoint();
      const CMatrix rhs = direct_sum(det2(m) * wigner_t(l - 1, m), wigner_t(l + 1, m));
      err = std::max(err, max_abs_diff(lhs, rhs));
      const CMatrix dl = d * kron(inverse_transpose2(m), wigner_t(l, m)) * d.adjoint();
      const CMatrix dr = direct_sum(wigner_t(l - 1, m), wigner_t(l + 1, m) / det2(m));
      derr = std::max(derr, max_abs_diff(dl, dr));
    }
  }
  acc.bound(orth, 1e-12, "orthogonality");
  acc.bound(err, 1e-9, "CG decomposition error");
  acc.bound(derr, 1e-9, "dual CG decomposition error");
  const double d1 = max_abs_diff(dual_cg_transform(1).matrix, golden::dual_cg_l1());
  acc.bound(d1, 1e-12, "D_1 deviation");
  acc.note("CG " + fmt(err) + ", dual " + fmt(derr) + ", D_1 " + fmt(d1));
}

// Indices of U_Sch rows: block, w, i
struct SchurIndex {
  size_t block;
  int w, i;
};

inline std::vector<SchurIndex> schur_indices(const SchurBasis &sb) {
  std::vector<SchurIndex> idx;
  for (size_t b = 0; b < sb.blocks.size(); b++)
    for (int w = 0; w < sb.blocks[b].m; w++)
      for (int i = 0; i < sb.blocks[b].d; i++)
        idx.push_back({b, w, i});
  return idx;
}

// 7. Schur basis, n <= 6.
inline void check_schur(const Ctx &ctx, Acc &acc) {
  Rng rng(ctx.opt.seed + 7);
  double orth = 0, pattern = 0, winv = 0, unit = 0, round = 0;
  for (int n = 1; n <= ctx.max_schur_n(); n++) {
    const auto sb = build_schur_basis(n);
    const size_t dim = size_t(1) << n;
    orth = std::max(orth, max_abs_diff(sb->u_sch * sb->u_sch.adjoint(), CMatrix::Identity(dim, dim)));
    const auto idx = schur_indices(*sb);
    for (int k = 0; k + 1 < n; k++) {
      Permutation pi(n);
      std::iota(pi.begin(), pi.end(), 0);
      std::swap(pi[k], pi[k + 1]);
      const CMatrix x = sb->u_sch * permutation_matrix(n, pi) * sb->u_sch.adjoint();
      for (size_t r = 0; r < dim; r++)
        for (size_t c = 0; c < dim; c++) {
          const auto &a = idx[r], &b = idx[c];
          if (a.block != b.block || a.w != b.w) {
            pattern = std::max(pattern, std::abs(x(r, c)));
          } else if (a.w > 0) {
            // I_m (x) P_lambda: same block at every w
            const auto &bl = sb->blocks[a.block];
            const complex_t ref = x(bl.row_offset + a.i, bl.row_offset + b.i);
            winv = std::max(winv, std::abs(x(r, c) - ref));
          }
        }
    }
    for (int trial = 0; trial < 10; trial++) {
      const CMatrix m = random_gaussian_matrix(rng, 2, 2);
      const CMatrix lhs = sb->u_sch * tensor_power(m, n) * sb->u_sch.adjoint();
      CMatrix rhs = CMatrix::Zero(dim, dim);
      for (const auto &bl : sb->blocks) {
        const CMatrix q = kron(q_lambda(bl.lambda, m), CMatrix::Identity(bl.d, bl.d));
        rhs.block(bl.row_offset, bl.row_offset, q.rows(), q.cols()) = q;
      }
      unit = std::max(unit, max_abs_diff(lhs, rhs));
      const CMatrix theta = symmetrize(n, random_density(rng, int(dim)));
      round = std::max(round, max_abs_diff(preprocess_inverse(n, preprocess(n, theta)), theta));
    }
  }
  acc.bound(orth, 1e-10, "orthonormality defect");
  acc.bound(pattern, 1e-10, "permutation leakage outside I (x) P_lambda blocks");
  acc.bound(winv, 1e-10, "permutation block depends on w");
  acc.bound(unit, 1e-9, "M^n block form error");
  acc.bound(round, 1e-10, "Gamma' Gamma Theta - Theta");
  acc.note("n<=" + std::to_string(ctx.max_schur_n()) + ": orth " + fmt(orth) + ", blocks " +
           fmt(std::max(pattern, winv)) + ", Q_lambda " + fmt(unit) + ", round trip " + fmt(round));
}

// 8. Simulation agrees with the exact LP.
inline void check_simulation(const Ctx &ctx, Acc &acc) {
  Rng rng(ctx.opt.seed + 8);
  double dev = 0, trace = 0, equiv = 0, spread = 0;
  int count = 0;
  for (int n = 1; n <= ctx.max_n(); n += 2) {
    for (const auto &f : all_functions(n)) {
      const auto s = solve_lp(n, f);
      const auto t = to_doubles(s.t);
      const auto run = simulate_template(n, f, t);
      dev = std::max(dev, std::abs(run.worst_case - s.fidelity.get_d()));
      for (int h = 0; h <= n / 2; h++)
        dev = std::max(dev, std::abs(run.per_weight_fidelity_sim[h] - s.per_weight[h].get_d()));
      trace = std::max(trace, run.max_trace_error);
      count++;
    }
    const auto maj = BoolFn::majority(n);
    const auto t = to_doubles(solve_lp(n, maj).t);
    if (n <= 5)
      equiv = std::max(equiv, equivariance_check(n, t, 10, rng));
    // Per-U constancy over 20 Haar samples.
    for (const auto &f : {maj, BoolFn::parity(n)}) {
      const auto tf = to_doubles(solve_lp(n, f).t);
      std::vector<double> lo(n / 2 + 1, 2), hi(n / 2 + 1, -1);
      for (int s = 0; s < 20; s++) {
        const CMatrix u = haar_unitary(rng);
        const CMatrix un = tensor_power(u, n);
        for (int h = 0; h <= n / 2; h++) {
          const CMatrix out = run_template(n, tf, un * weight_input(n, h) * un.adjoint());
          const double fid = fidelity(u * output_ket(f.bar(h)), out);
          lo[h] = std::min(lo[h], fid);
          hi[h] = std::max(hi[h], fid);
        }
      }
      for (int h = 0; h <= n / 2; h++)
        spread = std::max(spread, hi[h] - lo[h]);
    }
  }
  acc.bound(equiv, 1e-9, "equivariance deviation");
  acc.bound(dev, 1e-9, "simulated vs exact fidelity");
  acc.bound(trace, 1e-10, "trace error");
  acc.bound(spread, 1e-10, "per-U fidelity spread");
  acc.note(std::to_string(count) + " functions, max |sim - exact| " + fmt(dev) +
           ", per-U spread " + fmt(spread) + ", equivariance " + fmt(equiv));
}

// 9. Exact Choi matrices for n = 1, 3.
inline void check_choi(const Ctx &, Acc &acc) {
  int matched = 0;
  for (const auto &g : golden::choi_matrices()) {
    const auto f = BoolFn::from_table(g.table);
    const int n = f.n();
    const QMatrix ref = g.matrix();
    const size_t din = size_t(1) << n;
    const std::string label = (g.ideal ? "ideal " : "optimal ") + g.name;
    ChoiResult r;
    if (g.ideal) {
      r = ideal_choi(n, f);
    } else {
      const auto s = solve_lp(n, f);
      r = synthesize_choi(n, f, s.per_weight);
      acc.expect(assemble_choi_from_template(n, f, s.t) == ref,
                 label + ": template assembly differs");
    }
    const bool same = r.matrix == ref && r.imag == QMatrix(2 * din, 2 * din);
    acc.expect(same, label + ": synthesized matrix differs");
    matched += same;
    acc.expect(is_tp_exact(ref, 2, din), label + ": not trace preserving");
    const auto cp = check_cptp(ref, 2, din);
    const bool expect_cp = !g.ideal || g.name == "ID";
    acc.expect(cp.is_cp == expect_cp && cp.is_tp,
               label + ": CP classification " + (cp.is_cp ? "CP" : "not CP"));
    acc.expect(r.is_cp == expect_cp, label + ": synthesized CP flag");
    if (g.ideal && g.name == "NOT") {
      const auto ev = hermitian_eigenvalues(ref.to_cmatrix());
      const auto &want = golden::ideal_not_spectrum();
      for (int i = 0; i < 4; i++)
        acc.expect(std::abs(ev(i) - want[i]) <= 1e-12, "ideal NOT spectrum");
    }
  }
  acc.note(std::to_string(matched) + "/" + std::to_string(golden::choi_matrices().size()) +
           " matrices exact, CP pattern as expected");
}

// 10. F_n(h) strictly decreasing in h.
inline void check_monotone(const Ctx &, Acc &acc) {
  int pairs = 0;
  for (int n = 1; n <= 31; n += 2) {
    const auto chain = majority_fidelity_chain(n, (n - 1) / 2);
    for (int h = 0; h <= (n - 1) / 2; h++) {
      acc.expect(chain[h] == majority_fidelity_direct(n, h),
                 "recurrence != direct at n=" + std::to_string(n));
      if (h + 1 <= (n - 1) / 2) {
        acc.expect(chain[h] > chain[h + 1], "not decreasing at n=" + std::to_string(n) +
                                                " h=" + std::to_string(h));
        pairs++;
      }
    }
  }
  acc.note(std::to_string(pairs) + " strict decreases");
}

// 11. Conjectures (reported only).
inline void check_conjectures(const Ctx &, Acc &acc) {
  int par = 0, ideal = 0;
  for (int n = 1; n <= 39; n += 2) {
    const auto F = solve_lp(n, BoolFn::parity(n)).fidelity;
    acc.expect(F == parity_conjecture(n), "parity n=" + std::to_string(n) + ": " + to_string(F));
    acc.expect(F == parse_rational(golden::parity_sequence()[(n - 1) / 2]),
               "parity n=" + std::to_string(n) + " differs from reference");
    par++;
  }
  for (int n : {1, 3, 5})
    for (const auto &f : all_functions(n)) {
      std::vector<Rational> t;
      for (int k = 0; k <= n / 2; k++)
        t.push_back(conjectured_ideal_t(n, f, k));
      const auto c = per_weight_fidelity(n, f, t);
      acc.expect(c == std::vector<Rational>(c.size(), 1), "ideal t fails for " + f.table());
      ideal++;
    }
  acc.note("parity closed form n<=39 (" + std::to_string(par) + " values), ideal t for " +
           std::to_string(ideal) + " functions");
}

struct CheckSpec {
  std::string id;
  std::string name;
  bool blocking;
  double time_limit;
  std::function<void(const Ctx &, Acc &)> fn;
};

inline std::vector<CheckSpec> specs(const Ctx &ctx) {
  const bool full = ctx.opt.level == VerifyLevel::full;
  return {
      {"1", "optimal fidelity table, n <= 3", true, 1, check_table3},
      {"2", full ? "all functions n=1,3,5 and n=7 sweep" : "all functions n=1,3,5", true, 5,
       check_sweep},
      {"3", "majority sequence n <= 21", true, 10, check_majority},
      {"4", "majority scaling at n = 101, 501, 1001", true, 30, check_asymptotics},
      {"5", "extremal channel identities l <= 10", true, 0, check_extremal},
      {"6", "Clebsch-Gordan decompositions l <= 10", true, 0, check_cg},
      {"7", full ? "Schur basis suite n <= 6" : "Schur basis suite n <= 5", true, 0, check_schur},
      {"8", full ? "simulation vs LP, n = 1..7" : "simulation vs LP, n = 1..5", true, 120,
       check_simulation},
      {"9", "exact Choi matrices n = 1, 3", true, 0, check_choi},
      {"10", "monotonicity of F_n(h), n <= 31", true, 0, check_monotone},
      {"11", "conjectures (parity closed form, ideal t)", false, 0, check_conjectures},
  };
}

inline CheckResult run_one(const CheckSpec &spec, const Ctx &ctx) {
  CheckResult r;
  r.id = spec.id;
  r.name = spec.name;
  r.blocking = spec.blocking;
  r.time_limit = spec.time_limit;
  Acc acc;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    spec.fn(ctx, acc);
  } catch (const std::exception &e) {
    acc.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (spec.time_limit > 0 && r.seconds > spec.time_limit)
    acc.expect(false, "runtime " + fmt(r.seconds) + " s exceeds " + fmt(spec.time_limit) + " s");
  r.passed = acc.ok();
  r.detail = acc.detail();
  return r;
}

} // namespace verify_detail

inline VerifyReport run_verification(const VerifyOptions &opt) {
  using namespace verify_detail;
  const Ctx ctx{opt};
  const auto all = specs(ctx);
  VerifyReport rep;
  if (std::thread::hardware_concurrency() > 1) {
    std::vector<std::future<CheckResult>> fut;
    for (const auto &s : all)
      fut.push_back(std::async(std::launch::async, [&s, &ctx] { return run_one(s, ctx); }));
    for (auto &f : fut)
      rep.checks.push_back(f.get());
  } else {
    for (const auto &s : all)
      rep.checks.push_back(run_one(s, ctx));
  }
  return rep;
}

inline std::string format_check(const CheckResult &c) {
  std::ostringstream s;
  s << (c.passed ? "PASS" : (c.blocking ? "FAIL" : "WARN")) << "  [" << c.id << "] " << c.name;
  if (!c.blocking)
    s << " (non-blocking)";
  s << "  (" << verify_detail::fmt(c.seconds) << " s)";
  if (!c.detail.empty())
    s << "  " << c.detail;
  return s.str();
}

} // namespace qmv
