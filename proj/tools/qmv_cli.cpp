/**
 * Copyright 2026, the qmv authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// qmv: command-line frontend.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 unsupported size.

#include <CLI11.hpp>
#include <iomanip>
#include <iostream>

#include "qmv/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kUnsupported = 3;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct size_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string decimal(const qmv::Rational &r, int places = 6) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(places) << r.get_d();
  return s.str();
}

std::string join(const std::vector<qmv::Rational> &v, const std::string &sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); i++)
    out += (i ? sep : "") + qmv::to_string(v[i]);
  return out;
}

nlohmann::json to_strings(const std::vector<qmv::Rational> &v) {
  auto j = nlohmann::json::array();
  for (const auto &x : v)
    j.push_back(qmv::to_string(x));
  return j;
}

qmv::BoolFn parse_table(const std::string &s) {
  try {
    return qmv::BoolFn::from_table(s);
  } catch (const std::invalid_argument &e) {
    throw usage_error(std::string("invalid truth table \"") + s + "\": " + e.what());
  }
}

std::set<int> parse_weights(const std::string &s, int n) {
  std::set<int> w;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t pos = 0;
    int h = -1;
    try {
      h = std::stoi(item, &pos);
    } catch (const std::exception &) {
      throw usage_error("--promise-weights: \"" + item + "\" is not an integer");
    }
    if (pos != item.size() || h < 0 || h > n / 2)
      throw usage_error("--promise-weights: weight \"" + item + "\" outside 0.." +
                        std::to_string(n / 2));
    w.insert(h);
  }
  if (w.empty())
    throw usage_error("--promise-weights: empty list");
  return w;
}

int cmd_fidelity(const std::string &table, const std::string &weights, bool json, bool csv) {
  const auto f = parse_table(table);
  const int n = f.n();
  std::optional<std::set<int>> W;
  if (!weights.empty())
    W = parse_weights(weights, n);
  const auto s = qmv::solve_lp(n, f, W);
  if (json) {
    nlohmann::json j;
    j["table"] = table;
    j["n"] = n;
    j["fidelity"] = qmv::to_string(s.fidelity);
    j["fidelity_decimal"] = s.fidelity.get_d();
    j["t"] = to_strings(s.t);
    j["c"] = to_strings(s.per_weight);
    if (W)
      j["promise_weights"] = *W;
    std::cout << j.dump(2) << "\n";
  } else if (csv) {
    std::cout << "truth_table,F,F_decimal,t,c\n"
              << table << "," << qmv::to_string(s.fidelity) << "," << decimal(s.fidelity) << ","
              << join(s.t, ";") << "," << join(s.per_weight, ";") << "\n";
  } else {
    std::cout << "n = " << n << "\n"
              << "F = " << qmv::to_string(s.fidelity) << " ≈ " << decimal(s.fidelity) << "\n"
              << "t = (" << join(s.t, ", ") << ")\n"
              << "c = (" << join(s.per_weight, ", ") << ")\n";
  }
  return kOk;
}

int cmd_majority_table(int n_max) {
  if (n_max < 1 || n_max % 2 == 0)
    throw usage_error("majority-table: n_max must be odd and positive");
  bool all = true;
  std::cout << "n,F,F_decimal,agree\n";
  for (int n = 1; n <= n_max; n += 2) {
    const auto r = qmv::majority_fidelity_recursive(n);
    const auto lp = qmv::solve_lp(n, qmv::BoolFn::majority(n)).fidelity;
    const bool agree = r == lp && r == qmv::majority_fidelity_direct(n, (n - 1) / 2);
    all = all && agree;
    std::cout << n << "," << qmv::to_string(r) << "," << decimal(r) << ","
              << (agree ? "true" : "false") << "\n";
  }
  return all ? kOk : kVerifyFailed;
}

int cmd_choi(const std::string &table, bool ideal, bool golden) {
  const auto f = parse_table(table);
  const int n = f.n();
  if (n > qmv::kMaxSynthQubits)
    throw size_error("choi: n = " + std::to_string(n) + " exceeds the supported maximum " +
                     std::to_string(qmv::kMaxSynthQubits));
  qmv::ChoiResult r;
  if (ideal)
    r = qmv::ideal_choi(n, f);
  else
    r = qmv::synthesize_choi(n, f, qmv::solve_lp(n, f).per_weight);
  const size_t din = size_t(1) << n;
  const auto cptp = qmv::check_cptp(r.matrix, 2, din);
  nlohmann::json j;
  j["table"] = table;
  j["n"] = n;
  j["kind"] = ideal ? "ideal" : "optimal";
  j["dimension"] = 2 * din;
  j["fidelities"] = to_strings(r.fidelities);
  j["trace_preserving"] = qmv::is_tp_exact(r.matrix, 2, din);
  j["completely_positive"] = cptp.is_cp;
  j["min_eigenvalue"] = cptp.min_eigenvalue;
  j["matrix"] = qmv::to_json(r.matrix);
  int status = kOk;
  if (golden) {
    const qmv::golden::ChoiEntry *ref = nullptr;
    for (const auto &g : qmv::golden::choi_matrices())
      if (g.table == table && g.ideal == ideal)
        ref = &g;
    if (!ref)
      throw usage_error("choi --golden: no reference matrix for table " + table);
    const bool match = ref->matrix() == r.matrix && r.imag == qmv::QMatrix(2 * din, 2 * din);
    j["golden"] = {{"name", ref->name}, {"match", match}};
    std::cerr << "golden " << ref->name << ": " << (match ? "match" : "MISMATCH") << "\n";
    if (!match)
      status = kVerifyFailed;
  }
  std::cout << j.dump(2) << "\n";
  return status;
}

int cmd_verify(const std::string &level, bool inject, std::uint64_t seed) {
  qmv::VerifyOptions opt;
  opt.level = level == "quick" ? qmv::VerifyLevel::quick : qmv::VerifyLevel::full;
  opt.inject_fault = inject;
  opt.seed = seed;
  const auto report = qmv::run_verification(opt);
  for (const auto &c : report.checks)
    std::cout << qmv::format_check(c) << "\n";
  std::cout << (report.ok() ? "verification passed" : "verification FAILED") << "\n";
  return report.ok() ? kOk : kVerifyFailed;
}

int cmd_simulate(int n_max, const std::string &table, const std::string &path_name) {
  qmv::ChannelPath path = qmv::ChannelPath::closed_form;
  if (path_name == "kraus")
    path = qmv::ChannelPath::kraus;
  else if (path_name == "circuit")
    path = qmv::ChannelPath::circuit;
  std::vector<qmv::BoolFn> fns;
  if (!table.empty()) {
    fns.push_back(parse_table(table));
  } else {
    if (n_max < 1 || n_max % 2 == 0)
      throw usage_error("simulate: --n-max must be odd and positive");
    for (int n = 1; n <= n_max; n += 2)
      for (const auto &f : qmv::all_functions(n))
        fns.push_back(f);
  }
  bool ok = true;
  std::cout << "function,h,simulated,exact,abs_diff\n";
  std::cout << std::setprecision(12);
  for (const auto &f : fns) {
    if (f.n() > qmv::kMaxSchurQubits)
      throw size_error("simulate: n = " + std::to_string(f.n()) + " exceeds " +
                       std::to_string(qmv::kMaxSchurQubits));
    const auto s = qmv::solve_lp(f.n(), f);
    const auto run = qmv::simulate_template(f.n(), f, qmv::to_doubles(s.t), path);
    for (int h = 0; h <= f.n() / 2; h++) {
      const double exact = s.per_weight[h].get_d();
      const double d = std::abs(run.per_weight_fidelity_sim[h] - exact);
      ok = ok && d <= 1e-9;
      std::cout << f.table() << "," << h << "," << run.per_weight_fidelity_sim[h] << "," << exact
                << "," << d << "\n";
    }
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_schur(int n) {
  if (n < 1)
    throw usage_error("schur: n must be positive");
  if (n > qmv::kMaxSchurQubits)
    throw size_error("schur: n = " + std::to_string(n) + " exceeds " +
                     std::to_string(qmv::kMaxSchurQubits));
  std::cout << qmv::to_json(*qmv::build_schur_basis(n)).dump(2) << "\n";
  return kOk;
}

int cmd_circuit(int l, const std::string &which) {
  if (l < 1)
    throw usage_error("circuit: l must be positive");
  const auto e = which == "tr" ? qmv::Extremal::tr : qmv::Extremal::unot;
  const auto c = qmv::extremal_circuit(l, e);
  auto j = qmv::to_json(c);
  j["isometry"] = qmv::to_json(qmv::compose_circuit(c));
  std::cout << j.dump(2) << "\n";
  return kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Optimal unitary-equivariant channels for symmetric self-dual Boolean functions"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::uint64_t seed = qmv::kDefaultSeed;
  app.add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();

  std::string table, weights, level = "full", path = "closed", which;
  bool json = false, csv = false, ideal = false, optimal = false, golden = false, inject = false;
  int n_max = 7, n = 0, l = 0;

  auto *fid = app.add_subcommand("fidelity", "Exact optimal worst-case fidelity of one function");
  fid->add_option("table", table, "Truth table over weights 0..floor(n/2), e.g. 0101")->required();
  fid->add_option("--promise-weights", weights, "Allowed input weights, e.g. \"0,1,2\"");
  auto *jf = fid->add_flag("--json", json, "JSON output");
  fid->add_flag("--csv", csv, "CSV output")->excludes(jf);

  auto *maj = app.add_subcommand("majority-table", "Majority fidelities for odd n <= n_max (CSV)");
  maj->add_option("n_max", n_max, "Largest odd n")->required();

  auto *choi = app.add_subcommand("choi", "Exact Choi matrix (JSON), n <= 5");
  choi->add_option("table", table, "Truth table")->required();
  auto *io = choi->add_flag("--ideal", ideal, "Exact (generally non-CP) superoperator");
  auto *oo = choi->add_flag("--optimal", optimal, "Optimal equivariant channel");
  io->excludes(oo);
  choi->add_flag("--golden", golden, "Compare with the embedded reference matrix");

  auto *ver = app.add_subcommand("verify", "Run the acceptance suite");
  ver->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
  ver->add_flag("--inject-fault", inject, "Perturb a reference value (harness self-test)")
      ->group("");

  auto *sim = app.add_subcommand("simulate", "Density-matrix simulation vs exact LP (CSV)");
  sim->add_option("--n-max", n_max, "Simulate every function with odd n <= n-max")
      ->capture_default_str();
  sim->add_option("--table", table, "Simulate a single function");
  sim->add_option("--path", path, "Extremal channel implementation")
      ->check(CLI::IsMember({"closed", "kraus", "circuit"}))
      ->capture_default_str();

  auto *sch = app.add_subcommand("schur", "Schur basis with block manifest (JSON)");
  sch->add_option("n", n, "Number of qubits")->required();

  auto *cir = app.add_subcommand("circuit", "Gate list of an extremal channel (JSON)");
  cir->add_option("l", l, "Spin-register size")->required();
  cir->add_option("which", which, "tr or unot")->required()->check(CLI::IsMember({"tr", "unot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*fid)
      return cmd_fidelity(table, weights, json, csv);
    if (*maj)
      return cmd_majority_table(n_max);
    if (*choi) {
      if (!ideal && !optimal)
        throw usage_error("choi: one of --optimal or --ideal is required");
      return cmd_choi(table, ideal, golden);
    }
    if (*ver)
      return cmd_verify(level, inject, seed);
    if (*sim)
      return cmd_simulate(n_max, table, path);
    if (*sch)
      return cmd_schur(n);
    if (*cir)
      return cmd_circuit(l, which);
  } catch (const usage_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const size_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnsupported;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
