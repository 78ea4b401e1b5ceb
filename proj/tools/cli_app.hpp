#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace freefusion {

// Runs the command-line driver on an argument vector (program name excluded).
// Reports go to `out` unless redirected with --out; diagnostics go to `err`.
// Returns the process exit code: 0 all checks passed, 1 some check failed,
// 2 invalid input, 3 a bounded scan hit a truncation marker or was refused.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace freefusion
