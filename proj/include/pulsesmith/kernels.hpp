#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "pulsesmith/su2.hpp"

// Batched SU(2) arithmetic for sweeps over many error pairs.
//
// An SU(2) element is stored as a unit quaternion (w, x, y, z) meaning
// U = w I - i (x sigma_x + y sigma_y + z sigma_z). Batches are structure of
// arrays so the inner loops vectorize lane-wise. Every ISA variant performs
// the same operations in the same order without fused multiply-add, so all
// variants produce bit-identical results.
namespace pulsesmith::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

struct Quat {
    double w = 1.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

Quat to_quat(const Unitary2& u);
Unitary2 from_quat(const Quat& q);

class Su2Batch {
public:
    explicit Su2Batch(std::size_t lanes) : w(lanes, 1.0), x(lanes, 0.0), y(lanes, 0.0), z(lanes, 0.0) {}

    std::size_t size() const { return w.size(); }
    void set_identity();
    Quat lane(std::size_t i) const { return {w[i], x[i], y[i], z[i]}; }

    std::vector<double> w, x, y, z;
};

struct KernelTable {
    Isa isa;
    /// acc[i] = lhs[i] * acc[i]
    void (*left_multiply)(const Su2Batch& lhs, Su2Batch& acc);
    /// out[i] = min(1, |<target, acc[i]>|), i.e. |tr(T^dagger U_i)| / 2 for SU(2) operands.
    void (*overlap_fidelity)(const Quat& target, const Su2Batch& acc, std::span<double> out);
};

bool isa_supported(Isa isa);

/// Throws Error(Validation) when `isa` is not compiled in or not supported by this CPU.
const KernelTable& kernels_for(Isa isa);

/// Best supported ISA, unless PULSESMITH_KERNEL=scalar|avx2|neon overrides it.
/// Resolved once per process.
const KernelTable& active_kernels();

/// Fills `out` with rotation_with_error(pulse, (eps[i], f)) for every lane.
/// Transcendentals are evaluated with the scalar libm on every ISA.
void fill_rotation_with_error(const Pulse& pulse, std::span<const double> eps, double f, Su2Batch& out);

namespace detail {
void left_multiply_scalar(const Su2Batch& lhs, Su2Batch& acc);
void overlap_fidelity_scalar(const Quat& target, const Su2Batch& acc, std::span<double> out);
#if defined(PULSESMITH_HAVE_AVX2)
void left_multiply_avx2(const Su2Batch& lhs, Su2Batch& acc);
void overlap_fidelity_avx2(const Quat& target, const Su2Batch& acc, std::span<double> out);
#endif
#if defined(PULSESMITH_HAVE_NEON)
void left_multiply_neon(const Su2Batch& lhs, Su2Batch& acc);
void overlap_fidelity_neon(const Quat& target, const Su2Batch& acc, std::span<double> out);
#endif

// Lane formulas shared by the scalar kernel and the SIMD tails.
inline void multiply_lane(double lw, double lx, double ly, double lz,
                          double& w, double& x, double& y, double& z) {
    const double dot = (lx * x + ly * y) + lz * z;
    const double nw = lw * w - dot;
    const double nx = (lw * x + w * lx) + (ly * z - lz * y);
    const double ny = (lw * y + w * ly) + (lz * x - lx * z);
    const double nz = (lw * z + w * lz) + (lx * y - ly * x);
    w = nw;
    x = nx;
    y = ny;
    z = nz;
}

inline double overlap_lane(const Quat& t, double w, double x, double y, double z) {
    const double d = ((t.w * w + t.x * x) + t.y * y) + t.z * z;
    const double a = std::fabs(d);
    return a < 1.0 ? a : 1.0;
}
}  // namespace detail

}  // namespace pulsesmith::kernels
