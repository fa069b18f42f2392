#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mvg::cli {

// Exit codes.
inline constexpr int kOk = 0;        // success / affirmative answer
inline constexpr int kNegative = 1;  // well-formed negative answer
inline constexpr int kUsage = 2;
inline constexpr int kBadInput = 3;
inline constexpr int kResource = 4;

// args excludes the program name. "-" as a file argument means `in` / `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mvg::cli
