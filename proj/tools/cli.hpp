#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sparsedom::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kRefused = 3,
};

/// Runs one command line (without the program name). The run report goes to
/// `out` unless --report redirects it; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sparsedom::cli
