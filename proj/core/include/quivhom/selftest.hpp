#pragma once

// The property suites behind `selftest`: one suite per module family plus
// the worked dual-numbers regressions and an in-process determinism check.
// Reports are deterministic text with a stable field order; the seed fixes
// every randomized input.

#include <string>
#include <vector>

#include "quivhom/sampling.hpp"

namespace quivhom {

struct Fixture {
  std::string name;
  AlgebraPtr table;
  AlgebraPtr opposite;
};

// dual numbers, F_p[x]/(x^3), A2, A3, commutative square.
std::vector<Fixture> fixture_corpus(uint32_t prime);

struct SuiteResult {
  std::string name;
  std::vector<std::string> lines;
  bool pass = true;

  void check(bool ok, const std::string& line);
  void note(const std::string& line);
};

struct SelftestOptions {
  uint64_t seed = 0;
  uint32_t prime = 101;
};

SuiteResult run_linalg_suite(const SelftestOptions& opt);
SuiteResult run_algebra_suite(const SelftestOptions& opt);
SuiteResult run_repcat_suite(const SelftestOptions& opt);       // includes the pushout criterion
SuiteResult run_homological_suite(const SelftestOptions& opt);
SuiteResult run_fitting_suite(const SelftestOptions& opt);
SuiteResult run_hilton_rees_suite(const SelftestOptions& opt);
SuiteResult run_tor_suite(const SelftestOptions& opt);
SuiteResult run_realization_suite(const SelftestOptions& opt);
SuiteResult run_regression_suite(const SelftestOptions& opt);

// All suites plus a repeated-run determinism section; *all_pass reports the
// overall verdict.
std::string selftest_report(const SelftestOptions& opt, bool* all_pass);

}  // namespace quivhom
