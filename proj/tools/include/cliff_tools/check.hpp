#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cliff/clifford.hpp"

namespace cliff::tools {

struct CheckResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string note;  // why a check was skipped or threw
  bool skipped = false;
  bool ok() const noexcept { return skipped || passed == total; }
};

struct CheckConfig {
  FormPtr form;
  std::uint64_t seed = 1;
  std::size_t samples = 50;
  int max_n = 10;
};

/// Randomized invariant suite for one form. Each entry counts passing samples; a
/// domain error inside a check is reported as a failure with the error in the note.
std::vector<CheckResult> run_check_suite(const CheckConfig& config);

}  // namespace cliff::tools
