#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liescan::cli {

/// Dispatches one command. `args` excludes the program name.
/// Exit codes: 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liescan::cli
