#pragma once

#include <iosfwd>

namespace nullag::cli {

enum ExitCode : int {
    kOk = 0,
    kNegative = 1,
    kUsage = 2,
    kComputation = 3,
};

/// Runs one command line. Expressions missing from argv are read from `in`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace nullag::cli
