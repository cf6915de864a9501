#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace staircase::cli {

/// Stable process exit codes.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,  // bad flags, or nothing to do (e.g. an empty search grid)
    kInvalidInput = 2,
    kMismatch = 3,
    kOverflow = 4,
};

inline constexpr const char* kVersion = "0.1.0";

/// Runs one command line (without the program name). Data goes to `out` (or
/// to --out), diagnostics to `err`; `in` backs `--ideal -`. Reads
/// STAIRCASE_MAX_EXP from the environment on every call.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace staircase::cli
