#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace strongcommon {

// Exit codes shared by every command.
inline constexpr int kExitCertified = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNotApplicable = 2;
inline constexpr int kExitPartialFailure = 3;

// Runs the command line `args` (without the program name). Documents go to
// `out` unless --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strongcommon
