#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mbd {

/// Executes one CLI invocation (argv without the program name) against the
/// given streams. Returns the process exit status: 0 success, 1 harness
/// failures, 2 bad input/usage, 3 resource limit, 4 internal inconsistency.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

} // namespace mbd
