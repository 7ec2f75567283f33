#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace syllo {

inline constexpr int kExitValid = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (args excludes the program name).
/// Subcommands: check, trace, tables, laws, count, parse.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace syllo
