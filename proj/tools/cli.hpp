#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace algdesign::cli {

enum ExitCode { kSuccess = 0, kInternalError = 1, kInputError = 2, kBudgetExceeded = 3 };

/// Runs one command line (without the program name), writing the report to
/// `out` and diagnostics to `err`; returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace algdesign::cli
