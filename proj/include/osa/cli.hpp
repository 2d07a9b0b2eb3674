#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace osa {

enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitInvariantViolation = 2 };

/// Runs the `osa` command line with `args` (without the program name).
/// Text goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace osa
