#pragma once

#include <iosfwd>

namespace tqft {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitInvalidInput = 2,
    kExitSizeGuard = 3,
};

/// Runs the `tqftdims` command line; output goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tqft
