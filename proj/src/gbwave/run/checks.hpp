#pragma once

#include "gbwave/common.hpp"

namespace gbwave {

struct CheckResult {
  std::string name;
  double tolerance;
  double observed;
  bool pass;
};

struct CheckReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Module invariant suites runnable from the CLI: beam-core, quadrature,
/// spectral, examples (or all). Failures are report entries, not errors.
CheckReport verify(const std::string& suite);
std::vector<std::string> verify_suites();

}  // namespace gbwave
