#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curvefree::cli {

enum ExitCode : int {
    kOk = 0,
    /// A verification ran and something did not match.
    kCheckFailed = 1,
    /// Bad usage, unreadable or malformed input, violated precondition.
    kInputError = 2,
};

/// Runs one command. `args` excludes the program name. The JSON report goes
/// to `out`; usage text and diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace curvefree::cli
