#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringforge {

// Dispatches one CLI invocation. Reports go to `out`, diagnostics to `err`.
// Exit codes: 0 success, 1 domain error, 2 parse/usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ringforge
