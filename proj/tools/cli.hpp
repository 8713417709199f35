#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace snep::cli {

enum ExitCode : int {
  ok = 0,
  runtime_failure = 1,
  bad_config = 2,
  noncompliant = 3,
};

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace snep::cli
