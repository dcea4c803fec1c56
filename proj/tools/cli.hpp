#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace condkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitBudget = 3;

/// Runs one command line (args excludes the program name). Returns the
/// process exit code: 0 success, 2 invalid input or config, 3 simplex budget
/// exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace condkit::cli
