#pragma once

#include <ostream>

namespace schubert {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitPass = 0, kExitCounterexample = 1, kExitUsage = 2 };

/// Parses argv and runs one subcommand, writing the rendered result to `out`
/// (or to the --out file) and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schubert
