#pragma once

#include <cstdint>
#include <ostream>

namespace mvone {

// Seeded randomized property suites over the whole library. Prints one line
// per suite; returns true when every property held.
bool run_selftest(std::uint64_t seed, bool verbose, std::ostream& out);

}  // namespace mvone
