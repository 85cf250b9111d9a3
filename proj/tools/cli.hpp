#pragma once

#include <iosfwd>

namespace melonic::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

// Parses argv and runs one subcommand. Normal output goes to `out` unless
// --output names a file; diagnostics go to `err`.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace melonic::cli
