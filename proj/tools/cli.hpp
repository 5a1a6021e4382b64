#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rsched::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitUsage = 3;

/// Runs one subcommand; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsched::cli
