#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kronroot::cli {

/// Exit codes: affirmative answer, negative mathematical answer, bad input.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;

/// Run the command line `kronroot <args...>`.  args excludes the program
/// name.  Never throws; every failure maps to kExitUsage with a one-line
/// diagnostic on err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kronroot::cli
