#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unicyclic {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitVerification = 3;

/// Runs the command line `args` (args[0] is the program name). Never throws;
/// errors are written to `err` and mapped to the exit codes above.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unicyclic
