#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sv {

// Stable exit codes: 0 success/certified, 2 usage error, 3 conditions not
// met, 4 capacity exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotCertified = 3;
inline constexpr int kExitCapacity = 4;

/// Runs one CLI invocation (args without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sv
