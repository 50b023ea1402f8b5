#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bihom {

/// Exit codes of run_cli.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Runs one subcommand. `args` excludes the program name. Human-readable
/// output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bihom
