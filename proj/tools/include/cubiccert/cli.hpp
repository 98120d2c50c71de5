#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cubiccert {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 1,
  kExitHypothesis = 2,
  kExitOutOfScope = 3,
  kExitRedAlert = 4,
};

/// Runs one invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubiccert
