#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace onetwo::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNoSet = 3;
inline constexpr int kExitMismatch = 4;  // verify found a disagreement

// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace onetwo::cli
