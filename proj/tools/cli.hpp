#pragma once

#include <iosfwd>

namespace bivar::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kMalformedInput = 2, kInternalError = 3 };

/// Runs one command line. Results go to `out` (or the --out file), error
/// objects to `out` as well, diagnostics from argument parsing to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bivar::cli
