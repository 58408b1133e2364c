#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace leibniz::cli {

enum ExitCode : int { Ok = 0, Negative = 1, Usage = 2 };

/// Runs one command line (args excludes the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leibniz::cli
