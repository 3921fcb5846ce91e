// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace wigner::app {

struct CheckResult {
  std::string name;
  bool passed;
  double measured;   // the quantity compared against the tolerance
  double tolerance;  // after scaling
  double seconds;
  std::string details;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_passed = true;
  double total_seconds = 0;
  bool quick = false;
  double tolerance_scale = 1.0;

  const CheckResult* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
};

struct VerifyOptions {
  bool quick = false;             // subset that completes well under a minute
  double tolerance_scale = 1.0;   // < 1 tightens every numeric tolerance
  std::ostream* progress = nullptr;
};

// Runs the library's invariant suite: every module-level property at desk
// scale, each timed and compared against its pinned tolerance.
VerificationReport run_verification(const VerifyOptions& opts = {});

void write_verification_report(const std::string& path, const VerificationReport& report);

}  // namespace wigner::app
