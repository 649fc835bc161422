#pragma once

#include <iosfwd>

namespace lnewton {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
};

/// Entry point of the `lnewton` tool: table1 | resist | extremal | check |
/// diverge | ssc. Results go to `out` (or --output), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lnewton
