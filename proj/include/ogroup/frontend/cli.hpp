#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ogroup::frontend {

enum ExitCode : int {
  exit_ok = 0,
  exit_violation = 1,
  exit_input = 2,
  exit_cap = 3,
};

/// The command-line tool; `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace ogroup::frontend
