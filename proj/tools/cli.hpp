#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pkostka::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitUnresolved = 2;
inline constexpr int kExitVerifyFailed = 3;

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pkostka::cli
