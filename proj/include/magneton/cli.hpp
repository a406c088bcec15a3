#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace magneton::cli {

// Exit codes of the command-line front end.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 2;        // bad flags, preconditions, mode violations
inline constexpr int kNumericFailure = 3;    // non-convergence, truncation budget
inline constexpr int kCrossCheckFailure = 4; // a constant disagrees with its numeric check

// Runs one command. args excludes the program name. Data and reports go to
// out (or to the --out file), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parses a --rho argument list. Each entry is a number, a comma-separated
// list of numbers, or an inclusive range "from:to:step".
std::vector<double> parse_rho_list(const std::vector<std::string>& entries);

}  // namespace magneton::cli
