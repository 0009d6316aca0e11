/**
 * Copyright 2026, the qmv authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// One PASS/FAIL line per acceptance criterion; exit status 1 on any blocking
// failure. Tolerances and time limits live in qmv/verify.hpp.

#include <iostream>

#include "qmv/verify.hpp"

int main() {
  qmv::VerifyOptions opt;
  opt.level = qmv::VerifyLevel::full;
  const auto report = qmv::run_verification(opt);
  for (const auto &c : report.checks)
    std::cout << qmv::format_check(c) << "\n";

  // The harness must notice a perturbed reference value.
  opt.inject_fault = true;
  const auto faulty = qmv::run_verification(opt);
  const bool caught = !faulty.ok() && !faulty.checks.front().passed;
  std::cout << (caught ? "PASS" : "FAIL") << "  [self-test] injected fault reported as failure\n";

  const bool ok = report.ok() && caught;
  std::cout << (ok ? "ALL BLOCKING CRITERIA PASS" : "BLOCKING FAILURE") << "\n";
  return ok ? 0 : 1;
}
