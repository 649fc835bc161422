#pragma once

#include <string>
#include <vector>

namespace lnewton {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct InvariantOptions {
  /// Multiplies every tolerance the suites compare against. Only meant as a
  /// test hook: 0 turns the tolerance-based checks into exact-equality ones.
  double tolerance_scale = 1.0;
  unsigned long long seed = 20240611ULL;
};

/// Suites: "core", "resistance", "variational", "ssc", "all".
/// Throws DomainError for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite, const InvariantOptions& options = {});

const std::vector<std::string>& suite_names();

}  // namespace lnewton
