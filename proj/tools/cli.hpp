#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace napkin::cli {

/// Parses `args` (without the program name) and runs the selected subcommand.
/// Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace napkin::cli
