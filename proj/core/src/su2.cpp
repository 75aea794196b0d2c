#include "spincorr/su2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spincorr {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double wrap_angle(double alpha) noexcept {
    double a = std::fmod(alpha, kTwoPi);
    if (a <= -std::numbers::pi) {
        a += kTwoPi;
    } else if (a > std::numbers::pi) {
        a -= kTwoPi;
    }
    return a;
}

Direction Direction::from_angle(double alpha) {
    if (!std::isfinite(alpha)) throw std::domain_error("direction angle must be finite");
    const double wrapped = wrap_angle(alpha);
    return Direction(wrapped, {std::cos(wrapped), std::sin(wrapped), 0.0});
}

Direction Direction::from_vector(double x, double y, double z) {
    const double norm = std::sqrt(x * x + y * y + z * z);
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > kAlgebraicTol)
        throw std::domain_error("direction vector must have unit norm");
    if (z == 0.0) {
        // Exactly in-plane axes collapse to the planar chart.
        return Direction(wrap_angle(std::atan2(y, x)), {x, y, 0.0});
    }
    return Direction(std::nullopt, {x, y, z});
}

double Direction::planar_angle() const {
    if (!planar_) throw std::logic_error("direction is not in the planar family");
    return *planar_;
}

double Direction::dot(const Direction& other) const noexcept {
    return vec_[0] * other.vec_[0] + vec_[1] * other.vec_[1] + vec_[2] * other.vec_[2];
}

double angle_between(const Direction& a, const Direction& b) noexcept {
    if (a.is_planar() && b.is_planar()) {
        // Exact at the degenerate separations 0 and π.
        return std::abs(wrap_angle(a.planar_angle() - b.planar_angle()));
    }
    return std::acos(std::clamp(a.dot(b), -1.0, 1.0));
}

bool Spinor::is_normalized(double tol) const noexcept {
    return std::abs(norm_sq() - 1.0) <= tol;
}

UnitaryOp UnitaryOp::identity() noexcept {
    return {{{{Amplitude{1.0, 0.0}, Amplitude{0.0, 0.0}},
              {Amplitude{0.0, 0.0}, Amplitude{1.0, 0.0}}}}};
}

Spinor UnitaryOp::apply(const Spinor& s) const noexcept {
    return {m[0][0] * s.up + m[0][1] * s.down, m[1][0] * s.up + m[1][1] * s.down};
}

UnitaryOp UnitaryOp::dagger() const noexcept {
    return {{{{std::conj(m[0][0]), std::conj(m[1][0])},
              {std::conj(m[0][1]), std::conj(m[1][1])}}}};
}

UnitaryOp UnitaryOp::operator*(const UnitaryOp& rhs) const noexcept {
    UnitaryOp out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.m[i][j] = m[i][0] * rhs.m[0][j] + m[i][1] * rhs.m[1][j];
    return out;
}

Amplitude UnitaryOp::determinant() const noexcept {
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

bool UnitaryOp::is_special_unitary(double tol) const noexcept {
    const UnitaryOp gram = dagger() * (*this);
    const UnitaryOp id = identity();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (std::abs(gram.m[i][j] - id.m[i][j]) > tol) return false;
    return std::abs(determinant() - Amplitude{1.0, 0.0}) <= tol;
}

Spinor spin_state(const Direction& d, SpinSign s) {
    if (d.is_planar()) {
        const double half = d.planar_angle() / 2.0;
        const double c = std::cos(half);
        const double si = std::sin(half);
        if (s == SpinSign::plus) return {Amplitude{c, 0.0}, Amplitude{si, 0.0}};
        return {Amplitude{si, 0.0}, Amplitude{-c, 0.0}};
    }
    // Out-of-plane: Bloch construction in the relabeled frame (x,y,z)->(y,z,x),
    // chosen so the z = 0 limit reproduces the planar formulas above.
    const auto v = d.unit_vector();
    const double polar = std::acos(std::clamp(v[0], -1.0, 1.0));
    const double azimuth = std::atan2(v[2], v[1]);
    const double c = std::cos(polar / 2.0);
    const double si = std::sin(polar / 2.0);
    const Amplitude phase = std::polar(1.0, azimuth);
    if (s == SpinSign::plus) return {Amplitude{c, 0.0}, phase * si};
    return {Amplitude{si, 0.0}, -phase * c};
}

Spinor spin_state(double alpha, SpinSign s) {
    return spin_state(Direction::from_angle(alpha), s);
}

UnitaryOp rotation(double theta) {
    if (!std::isfinite(theta)) throw std::domain_error("rotation angle must be finite");
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {{{{Amplitude{c, 0.0}, Amplitude{-s, 0.0}},
              {Amplitude{s, 0.0}, Amplitude{c, 0.0}}}}};
}

Amplitude inner_product(const Spinor& a, const Spinor& b) noexcept {
    return std::conj(a.up) * b.up + std::conj(a.down) * b.down;
}

Decomposition decompose(const Direction& target, const Direction& basis, SpinSign s) {
    const Spinor state = spin_state(target, s);
    return {inner_product(spin_state(basis, SpinSign::plus), state),
            inner_product(spin_state(basis, SpinSign::minus), state)};
}

double transition_probability(const Spinor& a, const Spinor& b) noexcept {
    return std::min(1.0, std::norm(inner_product(a, b)));
}

bool ray_equivalent(const Spinor& a, const Spinor& b, double tol) noexcept {
    return std::abs(std::abs(inner_product(a, b)) - 1.0) <= tol;
}

}  // namespace spincorr
