#pragma once

#include <cstdint>

namespace hdrv {

// Counter-based generator: every draw is a pure function of (seed, counter),
// so parallel or reordered generation cannot change results.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t counter) {
    return splitmix64(splitmix64(seed) ^ splitmix64(counter * 0xd1342543de82ef95ULL + 1));
}

// Uniform in [0, 1).
inline double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(counter_bits(seed, counter) >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n); n must be > 0.
inline std::uint64_t counter_below(std::uint64_t seed, std::uint64_t counter, std::uint64_t n) {
    return static_cast<std::uint64_t>(counter_uniform(seed, counter) * static_cast<double>(n));
}

// Standard normal via Box-Muller on counters 2k and 2k+1.
double counter_gaussian(std::uint64_t seed, std::uint64_t counter);

} // namespace hdrv
