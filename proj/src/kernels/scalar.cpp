#include <algorithm>
#include <cmath>

#include "pulsesmith/kernels.hpp"

namespace pulsesmith::kernels {

void Su2Batch::set_identity() {
    std::fill(w.begin(), w.end(), 1.0);
    std::fill(x.begin(), x.end(), 0.0);
    std::fill(y.begin(), y.end(), 0.0);
    std::fill(z.begin(), z.end(), 0.0);
}

Quat to_quat(const Unitary2& u) { return {u(0, 0).real(), -u(0, 1).imag(), -u(0, 1).real(), -u(0, 0).imag()}; }

Unitary2 from_quat(const Quat& q) {
    return {cplx{q.w, -q.z}, cplx{-q.y, -q.x}, cplx{q.y, -q.x}, cplx{q.w, q.z}};
}

void fill_rotation_with_error(const Pulse& pulse, std::span<const double> eps, double f, Su2Batch& out) {
    const double norm = std::sqrt(1.0 + f * f);
    const double nx = std::cos(pulse.phi()) / norm;
    const double ny = std::sin(pulse.phi()) / norm;
    const double nz = f / norm;
    for (std::size_t i = 0; i < eps.size(); ++i) {
        const double angle = pulse.theta() * (1.0 + eps[i]) * norm;
        const double s = std::sin(0.5 * angle);
        out.w[i] = std::cos(0.5 * angle);
        out.x[i] = s * nx;
        out.y[i] = s * ny;
        out.z[i] = s * nz;
    }
}

namespace detail {

void left_multiply_scalar(const Su2Batch& lhs, Su2Batch& acc) {
    const std::size_t n = acc.size();
    for (std::size_t i = 0; i < n; ++i) {
        multiply_lane(lhs.w[i], lhs.x[i], lhs.y[i], lhs.z[i], acc.w[i], acc.x[i], acc.y[i], acc.z[i]);
    }
}

void overlap_fidelity_scalar(const Quat& target, const Su2Batch& acc, std::span<double> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = overlap_lane(target, acc.w[i], acc.x[i], acc.y[i], acc.z[i]);
}

}  // namespace detail

}  // namespace pulsesmith::kernels
