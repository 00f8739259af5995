#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyred {

// exit codes shared by every subcommand
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

// args excludes the program name. The report goes to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyred
