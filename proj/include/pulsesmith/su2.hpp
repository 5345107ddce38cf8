#pragma once

#include <array>
#include <complex>
#include <numbers>
#include <span>

namespace pulsesmith {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Dense 2x2 complex matrix, row-major (a11, a12, a21, a22).
///
/// Values built by the rotation constructors are in SU(2); the type itself
/// does not enforce unitarity so that truncated expansions and finite-difference
/// derivatives can share it.
class Mat2 {
public:
    constexpr Mat2() = default;
    constexpr Mat2(cplx a11, cplx a12, cplx a21, cplx a22) : m_{a11, a12, a21, a22} {}

    constexpr cplx operator()(int row, int col) const { return m_[static_cast<std::size_t>(2 * row + col)]; }
    constexpr const std::array<cplx, 4>& entries() const { return m_; }

    Mat2 adjoint() const;
    cplx trace() const { return m_[0] + m_[3]; }
    cplx det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
    double frobenius_norm() const;

    /// ||U^dagger U - I||_F
    double unitarity_defect() const;
    bool is_unitary(double tol = 1e-10) const { return unitarity_defect() <= tol; }

    friend Mat2 operator*(const Mat2& a, const Mat2& b);
    friend Mat2 operator+(const Mat2& a, const Mat2& b);
    friend Mat2 operator-(const Mat2& a, const Mat2& b);
    friend Mat2 operator*(cplx s, const Mat2& a);
    friend bool operator==(const Mat2&, const Mat2&) = default;

private:
    std::array<cplx, 4> m_{};
};

/// Any value produced by `rotation` or `rotation_with_error`.
using Unitary2 = Mat2;

inline constexpr Mat2 kIdentity{1.0, 0.0, 0.0, 1.0};
inline constexpr Mat2 kPauliX{0.0, 1.0, 1.0, 0.0};
inline constexpr Mat2 kPauliY{0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0};
inline constexpr Mat2 kPauliZ{1.0, 0.0, 0.0, -1.0};

/// Maps an angle onto [0, 2pi). Idempotent.
double normalize_phase(double phi);

/// One square pulse: rotation by `theta` about n_phi = (cos phi, sin phi, 0).
/// The phase is stored normalized to [0, 2pi).
class Pulse {
public:
    constexpr Pulse() = default;
    Pulse(double theta, double phi) : theta_(theta), phi_(normalize_phase(phi)) {}

    double theta() const { return theta_; }
    double phi() const { return phi_; }

    friend bool operator==(const Pulse&, const Pulse&) = default;

private:
    double theta_ = 0.0;
    double phi_ = 0.0;
};

/// Systematic error magnitudes: pulse-length (epsilon) and off-resonance (f).
struct ErrorPair {
    double epsilon = 0.0;
    double f = 0.0;

    friend bool operator==(const ErrorPair&, const ErrorPair&) = default;
};

/// cos(angle/2) I - i sin(angle/2) axis.sigma for a unit axis.
Unitary2 su2_from_axis_angle(double angle, const std::array<double, 3>& unit_axis);

Unitary2 rotation(const Pulse& pulse);

/// Exact exponential exp(-i theta (1+eps) (n_phi.sigma + f sigma_z) / 2).
Unitary2 rotation_with_error(const Pulse& pulse, const ErrorPair& err);

/// First-order truncation of `rotation_with_error`; not unitary. Only used as
/// a cross-check of the exact form.
Mat2 first_order_expansion(const Pulse& pulse, const ErrorPair& err);

/// Product U_k ... U_1 of matrices given in application order (index 0 acts first).
/// Throws Error(Validation, "empty sequence") on an empty list.
Mat2 compose(std::span<const Mat2> in_application_order);

/// |tr(U^dagger V)| / 2, clamped to [0, 1]. Both operands must be unitary to 1e-10.
double gate_fidelity(const Unitary2& u, const Unitary2& v);

double frobenius_distance(const Mat2& u, const Mat2& v);

}  // namespace pulsesmith
