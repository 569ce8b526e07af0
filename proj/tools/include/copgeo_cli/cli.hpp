#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace copgeo::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,     // bad flags or unparsable input
  kResource = 3,  // a size cap was hit
  kData = 4,      // well-formed input describing an invalid object
};

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace copgeo::cli
