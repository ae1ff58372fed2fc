#pragma once

#include <iosfwd>

namespace hermdens::cli {

// Parses argv, runs one subcommand, writes the result (JSON by default,
// aligned text with --format text) to `out` and diagnostics to `err`.
// Exit codes: 0 success, 1 failed checks, 2 violated precondition or bad
// usage, 3 enumeration budget exceeded.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hermdens::cli
