#pragma once

#include <iosfwd>

namespace ptrig::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

// Parses argv and runs one subcommand. Results go to out (or --out), messages
// to err. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ptrig::cli
