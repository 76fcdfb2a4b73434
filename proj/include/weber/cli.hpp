#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weber {

/// Runs one CLI invocation. `args` excludes the program name. Exit codes:
/// 0 success / optimal, 1 invalid input or infeasible, 2 iteration budget
/// exhausted or not optimal.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace weber
