#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eqgamma {

enum ExitStatus { kExitOk = 0, kExitVerdict = 1, kExitInput = 2 };

/// Runs the command line `args` (program name excluded).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqgamma
