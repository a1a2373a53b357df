#pragma once

#include <ostream>

namespace linex::cli {

// Process exit codes; stable for scripting.
enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kInfeasible = 3,
};

/// Parses argv (argv[0] is the program name) and runs one subcommand.
/// Reports go to `out`, diagnostics and timing to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace linex::cli
