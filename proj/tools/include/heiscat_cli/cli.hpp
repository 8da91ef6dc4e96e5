#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace heiscat::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kInternal = 3 };

/// Runs `heiscat <args...>` (program name excluded) and returns the exit code.
int run_subcommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heiscat::cli
