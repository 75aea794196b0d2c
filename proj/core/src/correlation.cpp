#include "spincorr/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spincorr {

namespace {

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw std::domain_error(std::string(what) + " must be finite");
}

void require_correlation(double e, const char* what) {
    if (!(std::abs(e) <= 1.0 + kAlgebraicTol))
        throw std::domain_error(std::string(what) + " must lie in [-1, 1]");
}

void require_probability(double p, const char* what) {
    if (!(p >= -kAlgebraicTol && p <= 1.0 + kAlgebraicTol))
        throw std::domain_error(std::string(what) + " must lie in [0, 1]");
}

}  // namespace

ConditionalTable conditional_distribution(double theta) {
    require_finite(theta, "theta");
    // cos²(θ/2) evaluated as (1 + cos θ)/2: exactly 1 at θ = 0 and exactly 0
    // at θ = π. p_same is the rounded complement, so the pair sums to 1
    // within half an ulp.
    const double p_opposite = 0.5 * (1.0 + std::cos(theta));
    return {theta, p_opposite, 1.0 - p_opposite};
}

JointTable joint_distribution(double theta) {
    const ConditionalTable cond = conditional_distribution(theta);
    const double half_opposite = 0.5 * cond.p_opposite;
    const double half_same = 0.5 * cond.p_same;
    return {theta, half_same, half_opposite, half_opposite, half_same};
}

double JointTable::probability(SpinSign l1, SpinSign l2) const noexcept {
    if (l1 == SpinSign::plus) return l2 == SpinSign::plus ? p_pp : p_pm;
    return l2 == SpinSign::plus ? p_mp : p_mm;
}

std::array<double, 2> JointTable::marginal1() const noexcept {
    return {p_pp + p_pm, p_mp + p_mm};
}

std::array<double, 2> JointTable::marginal2() const noexcept {
    return {p_pp + p_mp, p_pm + p_mm};
}

double JointTable::correlation_sum() const noexcept {
    return (p_pp + p_mm) - (p_pm + p_mp);
}

InequalityReport make_inequality_report(double lhs, double rhs) noexcept {
    const double margin = rhs - lhs;
    return {lhs, rhs, margin, margin >= 0.0};
}

CorrelationValue expected_correlation(double theta) {
    require_finite(theta, "theta");
    return -std::cos(theta);
}

CorrelationValue quantum_correlation(const Direction& ni, const Direction& nj) {
    return -std::clamp(ni.dot(nj), -1.0, 1.0);
}

InequalityReport bell_original(CorrelationValue e_ab, CorrelationValue e_ac,
                               CorrelationValue e_bc) {
    require_correlation(e_ab, "E(a,b)");
    require_correlation(e_ac, "E(a,c)");
    require_correlation(e_bc, "E(b,c)");
    return make_inequality_report(std::abs(e_ab - e_ac), 1.0 + e_bc);
}

double singlet_joint_plus_plus(double theta) {
    return joint_distribution(theta).p_pp;
}

InequalityReport wigner_probability(double p_ab, double p_ac, double p_cb) {
    require_probability(p_ab, "P(+,+|a,b)");
    require_probability(p_ac, "P(+,+|a,c)");
    require_probability(p_cb, "P(+,+|c,b)");
    return make_inequality_report(p_ab, p_ac + p_cb);
}

InequalityReport wigner_inequality(double theta_ab, double theta_ac, double theta_cb) {
    return wigner_probability(singlet_joint_plus_plus(theta_ab),
                              singlet_joint_plus_plus(theta_ac),
                              singlet_joint_plus_plus(theta_cb));
}

}  // namespace spincorr
