#pragma once

#include <ostream>

namespace prophet_gap {

/// Exit codes: 0 pass, 1 check failure, 2 usage or parse error.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Entry point of the `prophet_gap` tool: subcommands eval, bounds, verify,
/// beta-sweep. Writes results to `out`, diagnostics to `err`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace prophet_gap
