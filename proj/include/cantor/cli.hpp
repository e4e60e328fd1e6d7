#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cantor::cli {

enum ExitCode : int { ok = 0, usage = 1, data_error = 2 };

/// Runs the command line `args` (args[0] is the program name), writing
/// results to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cantor::cli
