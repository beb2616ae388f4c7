#pragma once

#include <cstdint>
#include <ostream>

namespace congrowth::cli {

/// Prints one PASS/FAIL line per check; true when all pass.
bool run_selftest(std::uint64_t seed, unsigned threads, std::ostream& out);

}  // namespace congrowth::cli
