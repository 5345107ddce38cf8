#include "pulsesmith/su2.hpp"

#include <algorithm>
#include <cmath>

#include "pulsesmith/error.hpp"

namespace pulsesmith {

namespace {

constexpr cplx kMinusI{0.0, -1.0};

}  // namespace

Mat2 Mat2::adjoint() const {
    return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])};
}

double Mat2::frobenius_norm() const {
    double sum = 0.0;
    for (const cplx& z : m_) sum += std::norm(z);
    return std::sqrt(sum);
}

double Mat2::unitarity_defect() const { return (adjoint() * *this - kIdentity).frobenius_norm(); }

Mat2 operator*(const Mat2& a, const Mat2& b) {
    const auto& x = a.m_;
    const auto& y = b.m_;
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.m_[0] + b.m_[0], a.m_[1] + b.m_[1], a.m_[2] + b.m_[2], a.m_[3] + b.m_[3]};
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.m_[0] - b.m_[0], a.m_[1] - b.m_[1], a.m_[2] - b.m_[2], a.m_[3] - b.m_[3]};
}

Mat2 operator*(cplx s, const Mat2& a) { return {s * a.m_[0], s * a.m_[1], s * a.m_[2], s * a.m_[3]}; }

double normalize_phase(double phi) {
    double r = std::fmod(phi, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    // r + 2pi can round up to exactly 2pi for tiny negative r
    if (r >= kTwoPi) r = 0.0;
    return r;
}

Unitary2 su2_from_axis_angle(double angle, const std::array<double, 3>& n) {
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    // c I - i s (nx sx + ny sy + nz sz)
    return {cplx{c, -s * n[2]}, cplx{-s * n[1], -s * n[0]},
            cplx{s * n[1], -s * n[0]}, cplx{c, s * n[2]}};
}

Unitary2 rotation(const Pulse& p) {
    return su2_from_axis_angle(p.theta(), {std::cos(p.phi()), std::sin(p.phi()), 0.0});
}

Unitary2 rotation_with_error(const Pulse& p, const ErrorPair& err) {
    const double norm = std::sqrt(1.0 + err.f * err.f);
    const double angle = p.theta() * (1.0 + err.epsilon) * norm;
    return su2_from_axis_angle(angle, {std::cos(p.phi()) / norm, std::sin(p.phi()) / norm, err.f / norm});
}

Mat2 first_order_expansion(const Pulse& p, const ErrorPair& err) {
    const Mat2 u = rotation(p);
    const Mat2 generator = cplx{0.5 * p.theta() * std::cos(p.phi())} * kPauliX +
                           cplx{0.5 * p.theta() * std::sin(p.phi())} * kPauliY;
    return u + (kMinusI * err.epsilon) * (generator * u) +
           (kMinusI * (err.f * std::sin(0.5 * p.theta()))) * kPauliZ;
}

Mat2 compose(std::span<const Mat2> in_application_order) {
    if (in_application_order.empty()) throw_validation("empty sequence");
    Mat2 acc = in_application_order.front();
    for (const Mat2& u : in_application_order.subspan(1)) acc = u * acc;
    return acc;
}

double gate_fidelity(const Unitary2& u, const Unitary2& v) {
    if (!u.is_unitary(1e-10) || !v.is_unitary(1e-10)) throw_validation("non-unitary operand");
    const double f = std::abs((u.adjoint() * v).trace()) / 2.0;
    return std::clamp(f, 0.0, 1.0);
}

double frobenius_distance(const Mat2& u, const Mat2& v) { return (u - v).frobenius_norm(); }

}  // namespace pulsesmith
