// Command-line front end; exposed as a function so tests can drive it.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hsplit {

// Runs one invocation (args exclude the program name) writing to the given
// streams.  Exit status: 0 success, 1 infeasible under --expect-feasible,
// 2 usage or input errors, 3 enumeration bounds exceeded.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace hsplit
