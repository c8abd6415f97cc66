#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace interference::cli {

/// Runs the command line given argv-style arguments (program name excluded).
/// Returns the process exit code: 0 success, 1 usage error, 2 data or I/O
/// error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace interference::cli
