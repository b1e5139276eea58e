#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace markedpoly::cli {

// Exit codes.
inline constexpr int kSuccess = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsageError = 2;

// Runs the command line `args` (without the program name). Output goes to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace markedpoly::cli
