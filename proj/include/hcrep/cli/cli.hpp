#pragma once

#include <iosfwd>

namespace hcrep::cli {

/// Exit codes: 0 success, 1 a computed verdict failed (a counterexample or a
/// failing acceptance criterion), 2 usage error or rejected input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv, runs one subcommand and writes the report to `out` (or the
/// --output file). Diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hcrep::cli
