#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace reflective {

/// Runs the command line front end on `args` (without the program name) and
/// returns the process exit code: 0 success, 2 input error, 3 mathematical
/// inconsistency.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reflective
