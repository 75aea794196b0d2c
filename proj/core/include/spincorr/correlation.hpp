#pragma once

/**
 * @file correlation.hpp
 * @brief Closed-form singlet-state distributions and Bell/Wigner inequality
 * evaluators — the analytic oracle the Monte Carlo layer is checked against.
 *
 * For measurements along axes separated by θ on a singlet pair:
 *   P(λ₂ = −λ₁ | λ₁) = cos²(θ/2),   P(λ₂ = +λ₁ | λ₁) = sin²(θ/2),
 *   P(λ₁, λ₂) = (1/2)·P(λ₂|λ₁),     E(λ₁λ₂) = −cos θ = −n₁·n₂.
 * The half-angle squares are evaluated as (1 ± cos θ)/2 so the degenerate
 * angles θ = 0 and θ = π come out exactly 0 and 1.
 *
 * Pure functions over immutable values; unrestricted concurrent use.
 */

#include <array>

#include "spincorr/su2.hpp"

namespace spincorr {

/// Correlation E(λ₁λ₂); always in [-1, 1].
using CorrelationValue = double;

/// P(λ₂ | λ₁) for a singlet pair measured at relative angle theta.
struct ConditionalTable {
    double theta;
    double p_opposite;  ///< P(λ₂ = −λ₁ | λ₁) = cos²(θ/2)
    double p_same;      ///< P(λ₂ = +λ₁ | λ₁) = sin²(θ/2)
};

/// Joint law P(λ₁, λ₂) over the four outcome pairs.
struct JointTable {
    double theta;
    double p_pp;  ///< P(+1, +1)
    double p_pm;  ///< P(+1, −1)
    double p_mp;  ///< P(−1, +1)
    double p_mm;  ///< P(−1, −1)

    double probability(SpinSign l1, SpinSign l2) const noexcept;
    /// Marginal of particle 1: {P(λ₁=+1), P(λ₁=−1)}; exactly (1/2, 1/2).
    std::array<double, 2> marginal1() const noexcept;
    std::array<double, 2> marginal2() const noexcept;
    /// Σ λ₁λ₂ P(λ₁,λ₂).
    double correlation_sum() const noexcept;
};

/// One Bell-type bound: satisfied ⇔ margin = rhs − lhs ≥ 0.
struct InequalityReport {
    double lhs;
    double rhs;
    double margin;
    bool satisfied;
};
InequalityReport make_inequality_report(double lhs, double rhs) noexcept;

ConditionalTable conditional_distribution(double theta);
JointTable joint_distribution(double theta);

/// E(λ₁λ₂) = −cos θ.
CorrelationValue expected_correlation(double theta);

/// −nᵢ·nⱼ; agrees with expected_correlation(angle_between(ni, nj)).
CorrelationValue quantum_correlation(const Direction& ni, const Direction& nj);

/// |E(a,b) − E(a,c)| ≤ 1 + E(b,c). Inputs must lie in [-1, 1].
InequalityReport bell_original(CorrelationValue e_ab, CorrelationValue e_ac,
                               CorrelationValue e_bc);

/// Singlet P(+,+) at relative angle theta: (1/2)sin²(θ/2).
double singlet_joint_plus_plus(double theta);

/// P(+,+|a,b) ≤ P(+,+|a,c) + P(+,+|c,b) on arbitrary probabilities.
InequalityReport wigner_probability(double p_ab, double p_ac, double p_cb);

/// Same bound with each side evaluated at the singlet value (1/2)sin²(θ/2).
InequalityReport wigner_inequality(double theta_ab, double theta_ac, double theta_cb);

}  // namespace spincorr
