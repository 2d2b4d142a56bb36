#ifndef ZETAREG_TOOLS_APP_HPP_
#define ZETAREG_TOOLS_APP_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "zetareg/errors.hpp"

namespace zetareg::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitDomain = 3,
};

int exit_code_for(ErrorKind kind);

// Runs the command line `args` (args[0] is the program name).  Results go
// to `out` or to the --out file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zetareg::cli

#endif  // ZETAREG_TOOLS_APP_HPP_
