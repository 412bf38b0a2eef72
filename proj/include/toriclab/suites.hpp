#pragma once

#include <string>
#include <vector>

#include "toriclab/config.hpp"

// The verification suites behind `run` and the acceptance harness. Every
// tolerance is pinned here or in the modules it calls; suite status is
// "pass" only when every certificate verified.

namespace toric {

struct SuiteResult {
  std::string name;
  std::string status;  // "pass" | "fail" | "undetermined"
  json counters;
  std::string first_failure;  // empty when passing
  double wall_seconds = 0.0;  // console display only, kept out of report files

  bool passed() const { return status == "pass"; }
};

SuiteResult run_suite(const std::string& name, const Config& cfg);
std::vector<SuiteResult> run_suites(const Config& cfg);

// Canonical machine-readable report: stable key order, no timings,
// byte-identical across runs for an identical config.
json report_json(const Config& cfg, const std::vector<SuiteResult>& results);

// 0 when everything passed, 1 otherwise.
int overall_exit_code(const std::vector<SuiteResult>& results);

}  // namespace toric
