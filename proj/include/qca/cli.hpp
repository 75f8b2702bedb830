#pragma once

#include <ostream>

namespace qca {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitIdentityFailed = 1, kExitUsage = 2, kExitResourceLimit = 3 };

/**
 * Runs the qca command line (compute, product, verify, table) with the given
 * arguments; argv[0] is the program name. Returns the process exit code.
 */
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qca
