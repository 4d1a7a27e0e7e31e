#pragma once

#include <string>
#include <vector>

namespace interleave {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Library invariants at desk scale (a few seconds). Used by `selftest`.
std::vector<CheckResult> run_selfchecks();

}  // namespace interleave
