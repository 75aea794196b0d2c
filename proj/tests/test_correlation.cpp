#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spincorr/correlation.hpp"
#include "spincorr/su2.hpp"

using namespace spincorr;
using std::numbers::pi;

// ---------------------------------------------------------------------------
// Conditional distribution
// ---------------------------------------------------------------------------

TEST_CASE("conditional distribution at the pinned angles") {
    CHECK(conditional_distribution(0.0).p_opposite == 1.0);
    CHECK(conditional_distribution(0.0).p_same == 0.0);
    CHECK(conditional_distribution(pi).p_opposite == 0.0);
    CHECK(conditional_distribution(pi).p_same == 1.0);
    CHECK(std::abs(conditional_distribution(pi / 2).p_opposite - 0.5) <= 1e-12);
}

TEST_CASE("conditional probabilities are complementary half-angle squares") {
    for (int i = 0; i <= 360; ++i) {
        const double theta = i * pi / 360.0;
        const ConditionalTable t = conditional_distribution(theta);
        CHECK(std::abs(t.p_opposite + t.p_same - 1.0) <= 1e-12);
        CHECK(std::abs(t.p_opposite - std::pow(std::cos(theta / 2.0), 2)) <= 1e-12);
        CHECK(t.p_opposite >= 0.0);
        CHECK(t.p_same >= 0.0);
    }
}

// ---------------------------------------------------------------------------
// Joint distribution
// ---------------------------------------------------------------------------

TEST_CASE("joint distribution at the pinned angles") {
    const JointTable aligned = joint_distribution(0.0);
    CHECK(aligned.p_pm == 0.5);
    CHECK(aligned.p_mp == 0.5);
    CHECK(aligned.p_pp == 0.0);
    CHECK(aligned.p_mm == 0.0);

    const JointTable right_angle = joint_distribution(pi / 2);
    for (double p : {right_angle.p_pp, right_angle.p_pm, right_angle.p_mp, right_angle.p_mm})
        CHECK(std::abs(p - 0.25) <= 1e-12);

    // (1/2)·cos²(π/6) = 3/8 for the opposite-outcome cells.
    CHECK(std::abs(joint_distribution(pi / 3).p_pm - 0.375) <= 1e-12);
}

TEST_CASE("joint marginals are exactly uniform for all angles") {
    for (int i = 0; i <= 1000; ++i) {
        const double theta = -2 * pi + i * (4 * pi / 1000.0);
        const JointTable t = joint_distribution(theta);
        const auto m1 = t.marginal1();
        const auto m2 = t.marginal2();
        CHECK(m1[0] == 0.5);
        CHECK(m1[1] == 0.5);
        CHECK(m2[0] == 0.5);
        CHECK(m2[1] == 0.5);
        CHECK(std::abs(t.p_pp + t.p_pm + t.p_mp + t.p_mm - 1.0) <= 1e-12);
    }
}

TEST_CASE("joint table indexing matches the named cells") {
    const JointTable t = joint_distribution(1.1);
    CHECK(t.probability(SpinSign::plus, SpinSign::plus) == t.p_pp);
    CHECK(t.probability(SpinSign::plus, SpinSign::minus) == t.p_pm);
    CHECK(t.probability(SpinSign::minus, SpinSign::plus) == t.p_mp);
    CHECK(t.probability(SpinSign::minus, SpinSign::minus) == t.p_mm);
}

// ---------------------------------------------------------------------------
// Expected correlation: the −cos θ chain
// ---------------------------------------------------------------------------

TEST_CASE("expected correlation at the pinned angles") {
    CHECK(expected_correlation(0.0) == -1.0);
    CHECK(std::abs(expected_correlation(pi / 2)) <= 1e-12);
    CHECK(std::abs(expected_correlation(pi / 3) + 0.5) <= 1e-12);
}

TEST_CASE("expected correlation equals the four-term joint sum on a dense grid") {
    for (int i = 0; i <= 180; ++i) {
        const double theta = i * pi / 180.0;
        const double from_joint = joint_distribution(theta).correlation_sum();
        CHECK(std::abs(expected_correlation(theta) - from_joint) <= 1e-12);
        CHECK(std::abs(expected_correlation(theta) + std::cos(theta)) <= 1e-12);
    }
}

TEST_CASE("quantum correlation from axes") {
    const Direction x = Direction::from_vector(1.0, 0.0, 0.0);
    CHECK(quantum_correlation(x, x) == -1.0);
    CHECK(quantum_correlation(x, Direction::from_vector(-1.0, 0.0, 0.0)) == 1.0);

    // dot = 1/2 exactly.
    const Direction tilted = Direction::from_vector(0.5, std::sqrt(3.0) / 2.0, 0.0);
    CHECK(quantum_correlation(x, tilted) == -0.5);

    // Agreement with the angle form.
    for (int i = 0; i <= 36; ++i) {
        const double alpha = -pi + i * (2 * pi / 36.0);
        const Direction d = Direction::from_angle(alpha);
        const double via_dot = quantum_correlation(x, d);
        const double via_angle = expected_correlation(angle_between(x, d));
        CHECK(std::abs(via_dot - via_angle) <= 1e-12);
    }
}

TEST_CASE("born-rule agreement with the spinor layer") {
    for (int i = 0; i <= 90; ++i) {
        const double theta = i * pi / 90.0;
        const double born = transition_probability(spin_state(0.0, SpinSign::plus),
                                                   spin_state(theta, SpinSign::plus));
        CHECK(std::abs(conditional_distribution(theta).p_opposite - born) <= 1e-10);
    }
}

// ---------------------------------------------------------------------------
// Inequalities
// ---------------------------------------------------------------------------

TEST_CASE("bell inequality: degenerate and quantum cases") {
    const InequalityReport degenerate = bell_original(-1.0, -1.0, -1.0);
    CHECK(degenerate.lhs == 0.0);
    CHECK(degenerate.rhs == 0.0);
    CHECK(degenerate.satisfied);

    // Coplanar axes at 0, π/3, 2π/3: E_ab = −1/2, E_ac = +1/2, E_bc = −1/2.
    const double e_ab = expected_correlation(pi / 3);
    const double e_ac = expected_correlation(2 * pi / 3);
    const double e_bc = expected_correlation(pi / 3);
    const InequalityReport quantum = bell_original(e_ab, e_ac, e_bc);
    CHECK(std::abs(quantum.lhs - 1.0) <= 1e-12);
    CHECK(std::abs(quantum.rhs - 0.5) <= 1e-12);
    CHECK_FALSE(quantum.satisfied);
    CHECK(std::abs(quantum.margin + 0.5) <= 1e-12);
}

TEST_CASE("bell inequality validates its input range") {
    CHECK_THROWS_AS(bell_original(1.5, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(bell_original(0.0, -1.0001, 0.0), std::domain_error);
    CHECK_THROWS_AS(bell_original(0.0, 0.0, std::nan("")), std::domain_error);
}

TEST_CASE("wigner inequality: pinned values") {
    const InequalityReport all_zero = wigner_inequality(0.0, 0.0, 0.0);
    CHECK(all_zero.lhs == 0.0);
    CHECK(all_zero.rhs == 0.0);
    CHECK(all_zero.satisfied);

    // lhs = (1/2)sin²(π/3) = 3/8; rhs = 2·(1/2)sin²(π/6) = 1/4.
    const InequalityReport violated = wigner_inequality(2 * pi / 3, pi / 3, pi / 3);
    CHECK(std::abs(violated.lhs - 0.375) <= 1e-12);
    CHECK(std::abs(violated.rhs - 0.25) <= 1e-12);
    CHECK_FALSE(violated.satisfied);

    const InequalityReport held = wigner_inequality(pi / 2, pi / 2, pi / 2);
    CHECK(std::abs(held.lhs - 0.25) <= 1e-12);
    CHECK(std::abs(held.rhs - 0.5) <= 1e-12);
    CHECK(held.satisfied);
}

TEST_CASE("singlet same-sign probability matches the joint table") {
    for (int i = 0; i <= 60; ++i) {
        const double theta = i * pi / 60.0;
        CHECK(std::abs(singlet_joint_plus_plus(theta) - joint_distribution(theta).p_pp) <=
              1e-12);
    }
}

// ---------------------------------------------------------------------------
// LHV soundness: exhaustive over deterministic strategies
// ---------------------------------------------------------------------------

TEST_CASE("every deterministic anti-correlated strategy satisfies both bounds") {
    // Independent enumeration: each strategy assigns a sign per axis label to
    // particle 1; particle 2 is the opposite sign at the same label. Exact
    // integer arithmetic throughout.
    int strategies_seen = 0;
    for (int mask = 0; mask < 8; ++mask) {
        const int sa = (mask & 4) ? -1 : +1;
        const int sb = (mask & 2) ? -1 : +1;
        const int sc = (mask & 1) ? -1 : +1;
        ++strategies_seen;

        const int e_ab = -sa * sb;
        const int e_ac = -sa * sc;
        const int e_bc = -sb * sc;
        const InequalityReport bell = bell_original(e_ab, e_ac, e_bc);
        CHECK(bell.satisfied);

        // P(+,+|x,y) = [λ₁(x) = +1]·[λ₂(y) = +1] = [s_x = +1]·[s_y = −1].
        const double p_ab = (sa == 1 && sb == -1) ? 1.0 : 0.0;
        const double p_ac = (sa == 1 && sc == -1) ? 1.0 : 0.0;
        const double p_cb = (sc == 1 && sb == -1) ? 1.0 : 0.0;
        CHECK(wigner_probability(p_ab, p_ac, p_cb).satisfied);

        // Same-axis products are perfectly anti-correlated.
        CHECK(-sa * sa == -1);
    }
    CHECK(strategies_seen == 8);
}

TEST_CASE("a quantum coplanar triple violates both bounds") {
    const InequalityReport bell = bell_original(expected_correlation(pi / 3),
                                                expected_correlation(2 * pi / 3),
                                                expected_correlation(pi / 3));
    CHECK_FALSE(bell.satisfied);

    const InequalityReport wigner = wigner_inequality(2 * pi / 3, pi / 3, pi / 3);
    CHECK_FALSE(wigner.satisfied);
}

TEST_CASE("inequality report invariant: satisfied iff margin nonnegative") {
    for (double lhs : {0.0, 0.3, 1.0, 2.0}) {
        for (double rhs : {0.0, 0.3, 1.0, 1.5}) {
            const InequalityReport r = make_inequality_report(lhs, rhs);
            CHECK(r.margin == rhs - lhs);
            CHECK(r.satisfied == (r.margin >= 0.0));
        }
    }
}
