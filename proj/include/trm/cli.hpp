#pragma once

#include <iosfwd>

namespace trm {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitEmpty = 3,
};

/// Runs the `trm` command line (argv[0] is the program name). Normal output
/// goes to `out`, one-line diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trm
