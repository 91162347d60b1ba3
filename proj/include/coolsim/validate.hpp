#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coolsim {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Runs the oracle suite: dense Kraus vs diagonal channel on randomized
/// states, Kraus completeness, the rate-matrix Gamma2 limit, coherence
/// preservation on the untouched subspace, and product-state checks after
/// SR rounds. Randomized inputs derive from `seed`. With `corrupt_kraus`
/// set, the Kraus set is damaged on purpose (negative control).
ValidationReport run_validation(std::uint64_t seed, bool corrupt_kraus = false);

}  // namespace coolsim
