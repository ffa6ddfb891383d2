#pragma once

#include <iosfwd>

#include "anncode/reference_checks.hpp"

namespace anncode::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kParseError = 2,
    kPrecondition = 3,
    kScaleCap = 4,
};

/// Runs one command line. All output goes to `out`; diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// The `paper examples` command with replaceable graph builders.
int run_paper_examples(const ReferenceBuilders& builders, bool json, bool quiet, std::ostream& out,
                       std::ostream& err);

}  // namespace anncode::cli
