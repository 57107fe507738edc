#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace swkg::cli {

inline constexpr int kOk = 0;
inline constexpr int kLoadError = 1;
inline constexpr int kViolations = 2;
inline constexpr int kBudgetExhausted = 3;
inline constexpr int kUsage = 64;
inline constexpr int kUnsupportedQuestion = 65;

// Runs one `swkg` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace swkg::cli
