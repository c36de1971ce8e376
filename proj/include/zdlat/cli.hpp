#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zdlat::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kRefuted = 2,
  kSizeGuard = 3,
};

/// Runs the command line. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zdlat::cli
