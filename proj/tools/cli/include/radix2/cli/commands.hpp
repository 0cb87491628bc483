#pragma once

// radix2 subcommands. Exit codes:
//   0  success
//   1  property failure (selfcheck)
//   2  input or parse error, domain mismatch
//   3  precondition violation (size p > 2^n, non-primitive root, ...)

#include <iosfwd>
#include <string>
#include <vector>

namespace radix2::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitPrecondition = 3;

/// Runs the tool with argv-style arguments (args[0] is the program name).
/// Results go to `out` unless a subcommand writes an --output file;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radix2::cli
