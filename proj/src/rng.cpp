#include "hdrv/rng.hpp"

#include <cmath>

namespace hdrv {

double counter_gaussian(std::uint64_t seed, std::uint64_t counter) {
    // Guard the log against a zero draw.
    const double u1 = 1.0 - counter_uniform(seed, 2 * counter);
    const double u2 = counter_uniform(seed, 2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

} // namespace hdrv
