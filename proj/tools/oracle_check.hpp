#pragma once

#include <cstdint>
#include <iosfwd>

namespace swipt {

struct RunConfig;

/// Small-N comparison of every solver against the brute-force oracles.
/// Prints one line per check; returns the number of failures.
int run_oracle_check(const RunConfig& base, std::size_t draws, std::ostream& out);

}  // namespace swipt
