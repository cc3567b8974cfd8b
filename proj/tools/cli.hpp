#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tqcube::cli {

/// Runs one tqtool invocation. `args` excludes the program name.
/// Exit statuses: 0 success/pass, 1 verification failure (report on `out`),
/// 2 usage or argument error, 3 capacity error. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tqcube::cli
