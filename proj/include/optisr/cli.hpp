#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace optisr::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kNo = 1,         // decide answered NO, or verify rejected the sequence
    kBadInput = 2,   // usage, parse, or validation error
    kBudget = 3,     // state budget or size guard exhausted
    kInternal = 4,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace optisr::cli
