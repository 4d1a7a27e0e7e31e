#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace interleave {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes of run_cli.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitBudget = 2, kExitSelftest = 3 };

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace interleave
