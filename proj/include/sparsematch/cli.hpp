#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sparsematch::cli {

inline constexpr int kExitFound = 0;
inline constexpr int kExitNotFound = 1;
inline constexpr int kExitError = 2;
inline constexpr int kExitDiscrepancy = 3;

/// `args` excludes the program name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sparsematch::cli
