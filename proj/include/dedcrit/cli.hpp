#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dedcrit::cli {

enum ExitCode : int {
    kMaximal = 0,      // maximal / true
    kNotMaximal = 1,   // not-maximal / false
    kUnknown = 2,
    kUsage = 64,
    kInput = 65,       // malformed input or violated precondition
};

/// Runs one command line; args[0] is the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dedcrit::cli
