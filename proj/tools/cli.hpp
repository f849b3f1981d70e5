#pragma once

#include <iosfwd>

namespace quartic::cli {

enum ExitCode : int {
  kOk = 0,
  kVerdictFailed = 1,   // compare or convergence check ran and failed
  kSpecError = 2,       // malformed flags, config or spec values
  kPrecondition = 3,    // numerically unsafe request (e.g. truncation)
  kIoError = 4,
};

/// Full command-line front end. CSV goes to --out or, without it, to `out`;
/// the summary goes to `out` when --out is given and to `err` otherwise.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quartic::cli
