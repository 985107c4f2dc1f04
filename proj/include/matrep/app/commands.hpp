#pragma once

#include <iosfwd>

namespace matrep::app {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitAcceptanceFailed = 1,
  kExitParse = 2,
  kExitNumerical = 3,
  kExitIo = 4,
};

/// Full command-line front end. Results go to `out` (or to --out files),
/// diagnostics to `err` as a single line.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace matrep::app
