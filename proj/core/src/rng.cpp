#include "spincorr/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace spincorr {

std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t stream_index) noexcept {
    // One splitmix64 step with state master_seed + (index+1)·golden-gamma,
    // i.e. the splitmix64 output stream of master_seed at position index+1.
    std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ULL * (stream_index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::array<double, 3> RngStream::unit_vector() {
    // Uniform z and azimuth; fixed two-draw cost keeps streams alignable.
    const double z = 2.0 * next_double() - 1.0;
    const double azimuth = 2.0 * std::numbers::pi * next_double();
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(azimuth), r * std::sin(azimuth), z};
}

}  // namespace spincorr
