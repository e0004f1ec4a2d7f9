#pragma once

#include <iosfwd>

namespace su2est {

// Exit codes of the su2est command.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInfeasible = 2,
  kExitVerifyFailed = 3,
};

// Entry point of `su2est {bound|scan|optimal-probe|verify}`. Normal output
// goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace su2est
