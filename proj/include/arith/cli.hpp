#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arith::cli {

enum ExitCode : int {
  kHolds = 0,
  kRefuted = 1,
  kError = 2,
};

struct Options {
  bool color = false;
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Options& options = {});

}  // namespace arith::cli
