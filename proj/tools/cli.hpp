#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exotica::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs one command line (without the program name) and returns its exit
/// code. Polynomial arguments given as "-" are read from `in`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace exotica::cli
