#pragma once

/**
 * @file samplers.hpp
 * @brief Seeded Monte Carlo engines: the conditional-probability singlet
 * sampler, a deterministic hidden-vector model, exhaustive enumeration of
 * deterministic assignment strategies, and the sealed-envelope demo.
 *
 * Parallelism contract: work is split into fixed logical chunks of
 * kTrialsPerChunk trials; chunk k of a run owns RngStream(master_seed,
 * stream_base + k). Worker threads only schedule chunks, and aggregation
 * sums integer 4-cell counts, so results are bit-identical at any thread
 * count and any scheduling order.
 */

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "spincorr/correlation.hpp"
#include "spincorr/rng.hpp"
#include "spincorr/su2.hpp"

namespace spincorr {

/// One measured pair (λ₁, λ₂).
struct TrialOutcome {
    SpinSign lambda1;
    SpinSign lambda2;
};

/// Analyzer axes at the two wings.
struct MeasurementSettings {
    Direction dir1;
    Direction dir2;

    double theta() const noexcept { return angle_between(dir1, dir2); }
};

/// Integer tally over the four outcome pairs. Merging is commutative and
/// associative, which is what makes chunked aggregation order-independent.
struct TrialCounts {
    std::int64_t n_pp = 0;
    std::int64_t n_pm = 0;
    std::int64_t n_mp = 0;
    std::int64_t n_mm = 0;

    void add(TrialOutcome t) noexcept;
    std::int64_t total() const noexcept { return n_pp + n_pm + n_mp + n_mm; }
    TrialCounts& operator+=(const TrialCounts& rhs) noexcept;
};

struct CorrelationEstimate {
    TrialCounts counts;
    std::uint64_t n_trials = 0;
    double mean = 0.0;       ///< (N₊₊ + N₋₋ − N₊₋ − N₋₊) / N
    double std_error = 0.0;  ///< sqrt((1 − mean²) / N)

    /// Empirical P(λ₁ = +1, λ₂ = +1).
    double p_plus_plus() const noexcept;
    /// Empirical P(λ₁ = +1).
    double marginal1_plus() const noexcept;
};

/// Derive mean and standard error from a tally.
CorrelationEstimate make_estimate(const TrialCounts& counts);

/// Which pair model generates trials.
enum class PairModel { quantum_singlet, lhv_hidden_vector };

/// Sequential singlet trial: λ₁ uniform on {±1}, then λ₂ = −λ₁ with
/// probability cos²(θ/2), else +λ₁. λ₁ is drawn before the second axis is
/// consulted, so its law cannot depend on dir2.
TrialOutcome sample_singlet_pair(const MeasurementSettings& s, RngStream& rng);

/// Hidden-vector trial: λ⃗ uniform on the sphere, λ₁ = sign(λ⃗·dir1),
/// λ₂ = −sign(λ⃗·dir2). An exactly zero dot product redraws λ⃗.
/// Closed form: E(θ) = −1 + 2θ/π.
TrialOutcome sample_lhv_vector_model(const MeasurementSettings& s, RngStream& rng);

/// n trials of the chosen model from one stream. Throws std::domain_error
/// when n = 0.
CorrelationEstimate estimate_pairs(PairModel model, const MeasurementSettings& s,
                                   std::uint64_t n, RngStream& rng);

/// estimate_pairs with the quantum singlet model.
CorrelationEstimate estimate_correlation(const MeasurementSettings& s,
                                         std::uint64_t n, RngStream& rng);

/// Logical chunk size of the deterministic parallel layout.
inline constexpr std::uint64_t kTrialsPerChunk = 65536;

/// Chunked run: trials [k·65536, (k+1)·65536) come from
/// RngStream(master_seed, stream_base + k). `threads` controls scheduling
/// only; the result is bit-identical for any value.
CorrelationEstimate estimate_pairs_chunked(PairModel model, const MeasurementSettings& s,
                                           std::uint64_t n, std::uint64_t master_seed,
                                           std::uint64_t stream_base, unsigned threads = 1);

/// Deterministic outcome assignment for particle 1 at three axis labels
/// (a, b, c); particle 2 is forced to the opposite sign per label.
struct LhvStrategy {
    std::array<SpinSign, 3> particle1;
};

/// A strategy with its exact pairwise correlation products; each is
/// λ(x)·(−λ(y)) ∈ {+1, −1}.
struct StrategyCorrelations {
    LhvStrategy strategy;
    double e_ab;
    double e_ac;
    double e_bc;
};

/// All 2³ = 8 strategies for three distinct axes, in lexicographic order of
/// the (a, b, c) assignment with + before −. Throws std::invalid_argument
/// when two axes coincide.
std::vector<StrategyCorrelations> enumerate_lhv_strategies(
    const std::array<Direction, 3>& dirs);

/// One row of the E(θ) comparison table.
struct SweepRow {
    double theta;
    double analytic;
    double mc_mean;
    double mc_stderr;
    double lhv_mean;
    double lhv_stderr;
    std::uint64_t n;
};

/// Stream base reserved for (row, model) in sweep and multi-pair runs:
/// chunk indices occupy the low 32 bits.
constexpr std::uint64_t stream_base_for(std::uint64_t row, std::uint64_t model) noexcept {
    return (row * 2 + model) << 32;
}

/// Quantum MC, analytic, and hidden-vector MC at every grid angle. Row i
/// draws from stream bases stream_base_for(i, 0) and stream_base_for(i, 1),
/// so the layout depends only on the grid position.
std::vector<SweepRow> sweep_theta(std::span<const double> theta_grid,
                                  std::uint64_t n_per_point, std::uint64_t master_seed,
                                  unsigned threads = 1);

// --- Sealed-envelope demonstration ---------------------------------------

enum class Card { ace_of_hearts, ace_of_spades };

const char* card_name(Card c) noexcept;

/// Two sealed envelopes; the cards always differ.
struct EnvelopeState {
    Card alice_card;
    Card bob_card;
    bool alice_opened = false;
};

/// Conditional-probability bookkeeping of one run: the prior P(Bob holds
/// the Ace of Hearts) is 1/2; after Alice opens her envelope the posterior
/// collapses to 0 or 1. Nothing is signaled — only knowledge changes.
struct EnvelopeTranscript {
    double prior_prob;
    Card observed_card;
    double posterior_prob;
};

EnvelopeTranscript envelope_demo(RngStream& rng);

}  // namespace spincorr
