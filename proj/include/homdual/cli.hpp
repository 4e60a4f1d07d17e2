#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homdual::cli {

// Exit codes.
inline constexpr int kPositive = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;
inline constexpr int kGuard = 3;
inline constexpr int kInternal = 4;

// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homdual::cli
