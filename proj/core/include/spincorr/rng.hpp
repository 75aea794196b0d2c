#pragma once

/**
 * @file rng.hpp
 * @brief Deterministic, stream-indexed pseudo-random numbers for
 * reproducible parallel Monte Carlo.
 *
 * A stream is identified by (master_seed, stream_index). The stream seed is
 * the splitmix64 sequence of master_seed evaluated at position
 * stream_index + 1, feeding a std::mt19937_64 engine. The engine's output
 * sequence is pinned by the C++ standard, and doubles are built in-house as
 * (x >> 11) * 2^-53, so identical (seed, index) produce identical sequences
 * on every platform. Distinct indices give statistically independent
 * streams for Monte Carlo purposes.
 */

#include <array>
#include <cstdint>
#include <random>
#include <string_view>

namespace spincorr {

/// Identity recorded in machine-readable output for reproducibility.
inline constexpr std::string_view kGeneratorId = "mt19937_64/splitmix64-streams/v1";

/// splitmix64 output at position index+1 of the stream seeded by master.
std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t stream_index) noexcept;

class RngStream {
  public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
        : engine_(derive_stream_seed(master_seed, stream_index)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// True with probability p (p ≤ 0 never, p ≥ 1 always).
    bool bernoulli(double p) { return next_double() < p; }

    /// Uniform on the unit sphere; consumes exactly two draws.
    std::array<double, 3> unit_vector();

  private:
    std::mt19937_64 engine_;
};

}  // namespace spincorr
