#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace saw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kToolkitVersion = "1.0.0";

// Entry point for the `saw` tool; args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace saw::cli
