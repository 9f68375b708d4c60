#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace harmodisk::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_domain = 2,
  exit_io = 3,
  exit_numeric = 4,
};

// Runs the `harmodisk` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace harmodisk::cli
