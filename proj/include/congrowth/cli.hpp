#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace congrowth::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;   // selftest or check failed
inline constexpr int kUsage = 2;     // bad arguments or input
inline constexpr int kTruncated = 4; // element cap hit; partial output written

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace congrowth::cli
