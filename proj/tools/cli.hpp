#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bnp::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternalError = 1;
inline constexpr int kInputError = 2;
inline constexpr int kContractError = 3;

// Runs the `bnp` command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bnp::cli
