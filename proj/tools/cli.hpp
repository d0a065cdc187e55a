#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankcertify::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitStationary = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNotStationary = 2;
inline constexpr int kExitInfeasible = 3;

/// Entry point used by main() and by the tests. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankcertify::cli
