#pragma once

#include <ostream>

namespace rra::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;      // rejected word, differing languages, violations
inline constexpr int kUsage = 2;         // bad arguments or malformed file
inline constexpr int kPrecondition = 3;  // transform applied without its required flags

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace rra::cli
