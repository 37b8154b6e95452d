#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symknot {

// Runs one CLI invocation. Returns the process exit code: 0 success,
// 1 usage error, 2 domain error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symknot
