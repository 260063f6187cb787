#pragma once

#include <iosfwd>

namespace apolar::cli {

// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kUsage = 1, kCeiling = 2, kVerificationFailed = 3 };

// Parses argv (argv[0] is the program name), runs one command, and writes
// results to `out` and diagnostics/progress to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace apolar::cli
