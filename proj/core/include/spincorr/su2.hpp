#pragma once

/**
 * @file su2.hpp
 * @brief Exact spin-1/2 algebra: states |n,±>, SU(2) rotations, Born-rule
 * amplitudes, and ray (global-phase) equivalence.
 *
 * Conventions, fixed once for the whole library:
 *  - Measurement axes are unit 3-vectors. Axes in the z = 0 plane form the
 *    "planar" family n(α) = (cos α, sin α, 0), with α measured from the
 *    reference axis +x, positive α in the clockwise sense of the planar
 *    figure, normalized to (-π, π].
 *  - Planar eigenstates in the fixed reference basis:
 *        |n(α),+> = (cos α/2,  sin α/2)
 *        |n(α),−> = (sin α/2, −cos α/2)
 *    so that |n(0),+> = (1, 0) and decomposing |n(0),+> in the α = ±π/2
 *    bases gives coefficients (1/√2, ±1/√2).
 *  - Out-of-plane axes use the standard Bloch construction in the relabeled
 *    frame (x,y,z) → (y,z,x), i.e. ϑ = arccos(x), φ = atan2(z, y),
 *    |n,+> = (cos ϑ/2, e^{iφ} sin ϑ/2). The relabeling is a proper rotation,
 *    so angles between axes are preserved and the z = 0 case reduces to the
 *    planar formulas above.
 *
 * All types are immutable values; all functions are pure and thread-safe.
 */

#include <array>
#include <complex>
#include <optional>

namespace spincorr {

using Amplitude = std::complex<double>;

/// Algebraic-identity tolerance (values built from +,-,*,/ and sqrt).
inline constexpr double kAlgebraicTol = 1e-12;
/// Tolerance for values routed through transcendental evaluation.
inline constexpr double kTranscendentalTol = 1e-10;

/// Spin outcome along an axis: +1 (up) or -1 (down).
enum class SpinSign : int { plus = +1, minus = -1 };

constexpr int value(SpinSign s) noexcept { return static_cast<int>(s); }
constexpr SpinSign flip(SpinSign s) noexcept {
    return s == SpinSign::plus ? SpinSign::minus : SpinSign::plus;
}
constexpr SpinSign sign_from(int v) {
    return v >= 0 ? SpinSign::plus : SpinSign::minus;
}

/**
 * @brief A measurement axis: either a planar angle (z = 0 family) or a
 * general unit 3-vector.
 *
 * Construction validates unit norm to 1e-12 and normalizes planar angles
 * to (-π, π]. Vectors with an exactly zero z-component collapse to the
 * planar form, so the two charts can never disagree at runtime.
 */
class Direction {
  public:
    /// Planar axis at angle alpha (radians) from the reference axis.
    static Direction from_angle(double alpha);
    /// General axis; throws std::domain_error unless (x,y,z) has unit norm.
    static Direction from_vector(double x, double y, double z);

    bool is_planar() const noexcept { return planar_.has_value(); }
    /// Planar angle in (-π, π]; throws std::logic_error for non-planar axes.
    double planar_angle() const;
    std::array<double, 3> unit_vector() const noexcept { return vec_; }

    double dot(const Direction& other) const noexcept;
    bool operator==(const Direction& other) const noexcept = default;

  private:
    Direction(std::optional<double> planar, std::array<double, 3> vec)
        : planar_(planar), vec_(vec) {}
    std::optional<double> planar_;
    std::array<double, 3> vec_;
};

/// Angle in [0, π] between two axes; arccos of the clamped dot product,
/// computed exactly from the wrapped angle difference for planar pairs.
double angle_between(const Direction& a, const Direction& b) noexcept;

/// Normalize an angle to (-π, π].
double wrap_angle(double alpha) noexcept;

/**
 * @brief Normalized 2-component state in the fixed reference basis.
 *
 * Invariant |up|² + |down|² = 1 is the caller's responsibility for
 * hand-built values; every factory in this module produces normalized
 * states. is_normalized() checks it to 1e-12.
 */
struct Spinor {
    Amplitude up;
    Amplitude down;

    double norm_sq() const noexcept { return std::norm(up) + std::norm(down); }
    bool is_normalized(double tol = kAlgebraicTol) const noexcept;
    bool operator==(const Spinor&) const noexcept = default;
};

/**
 * @brief 2x2 complex matrix; rotation() produces members of SU(2).
 */
struct UnitaryOp {
    // m[row][col]
    std::array<std::array<Amplitude, 2>, 2> m;

    static UnitaryOp identity() noexcept;

    Spinor apply(const Spinor& s) const noexcept;
    UnitaryOp dagger() const noexcept;
    UnitaryOp operator*(const UnitaryOp& rhs) const noexcept;
    Amplitude determinant() const noexcept;
    /// U†U = 1 and det U = 1, both within tol.
    bool is_special_unitary(double tol = kAlgebraicTol) const noexcept;
};

/// Eigenstate |d, s> of the spin component along axis d.
Spinor spin_state(const Direction& d, SpinSign s);

/// Planar convenience overload: spin_state(Direction::from_angle(alpha), s).
Spinor spin_state(double alpha, SpinSign s);

/// In-plane rotation by theta: entries (cos θ/2, −sin θ/2; sin θ/2, cos θ/2).
/// rotation(θ)·spin_state(α,s) = spin_state(α+θ,s) up to global sign, and
/// rotation(θ+2π) = −rotation(θ) (the double cover).
UnitaryOp rotation(double theta);

/// <a|b>, conjugate-linear in the first argument.
Amplitude inner_product(const Spinor& a, const Spinor& b) noexcept;

/// Coefficients of spin_state(target,s) in the {|basis,+>, |basis,−>} basis.
struct Decomposition {
    Amplitude c_plus;
    Amplitude c_minus;
};
Decomposition decompose(const Direction& target, const Direction& basis, SpinSign s);

/// Born rule |<a|b>|², in [0, 1]; equals cos²(θ/2) for same-sign states
/// separated by angle θ.
double transition_probability(const Spinor& a, const Spinor& b) noexcept;

/// True iff a = e^{iφ} b for some global phase, i.e. |<a|b>| = 1 within tol.
bool ray_equivalent(const Spinor& a, const Spinor& b, double tol = kAlgebraicTol) noexcept;

}  // namespace spincorr
