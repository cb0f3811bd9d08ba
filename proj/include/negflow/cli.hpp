#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace negflow::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,  // I/O or parse error, or `verify` found a mismatch
    kUsage = 2,
    kCapExceeded = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace negflow::cli
