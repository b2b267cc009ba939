#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trsched {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitUsage = 2 };

/// Runs one command line (args excludes the program name). Primary output goes
/// to `out`; diagnostics go to `err` as single-line JSON.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trsched
