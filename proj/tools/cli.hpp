#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace covalg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitNotStandardizable = 2;
inline constexpr int kExitVerification = 3;

// Entry point of the covalg binary; returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace covalg::cli
