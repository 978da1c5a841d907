#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cvd {

enum ExitCode : int { kExitOk = 0, kExitNo = 1, kExitUsage = 2 };

/// Runs one command line (without the program name). Returns the exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Largest instance `verify` hands to the exact solver.
inline constexpr std::size_t kVerifyOracleLimit = 16;

}  // namespace cvd
