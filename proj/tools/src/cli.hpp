#pragma once

#include <iosfwd>

namespace dimlift::cli {

enum ExitCode : int {
  kOk = 0,
  kNotConfirmed = 1,
  kParse = 2,
  kUnsupported = 3,
  kResource = 4,
  kInvariant = 5,
};

/// Runs the command line; writes results to out and diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dimlift::cli
