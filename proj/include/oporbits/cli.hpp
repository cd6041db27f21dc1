#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oporbits {

/// Runs one CLI invocation. argv excludes the program name.
/// Exit codes: 0 computed, 2 input error, 3 precondition violation.
int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace oporbits
