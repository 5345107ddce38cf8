#include <arm_neon.h>

#include "pulsesmith/kernels.hpp"

namespace pulsesmith::kernels::detail {

// vmul/vadd only: vfma/vmla would break bitwise agreement with the scalar path.
void left_multiply_neon(const Su2Batch& lhs, Su2Batch& acc) {
    const std::size_t n = acc.size();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t lw = vld1q_f64(&lhs.w[i]);
        const float64x2_t lx = vld1q_f64(&lhs.x[i]);
        const float64x2_t ly = vld1q_f64(&lhs.y[i]);
        const float64x2_t lz = vld1q_f64(&lhs.z[i]);
        const float64x2_t w = vld1q_f64(&acc.w[i]);
        const float64x2_t x = vld1q_f64(&acc.x[i]);
        const float64x2_t y = vld1q_f64(&acc.y[i]);
        const float64x2_t z = vld1q_f64(&acc.z[i]);

        const float64x2_t dot = vaddq_f64(vaddq_f64(vmulq_f64(lx, x), vmulq_f64(ly, y)), vmulq_f64(lz, z));
        vst1q_f64(&acc.w[i], vsubq_f64(vmulq_f64(lw, w), dot));
        vst1q_f64(&acc.x[i], vaddq_f64(vaddq_f64(vmulq_f64(lw, x), vmulq_f64(w, lx)),
                                       vsubq_f64(vmulq_f64(ly, z), vmulq_f64(lz, y))));
        vst1q_f64(&acc.y[i], vaddq_f64(vaddq_f64(vmulq_f64(lw, y), vmulq_f64(w, ly)),
                                       vsubq_f64(vmulq_f64(lz, x), vmulq_f64(lx, z))));
        vst1q_f64(&acc.z[i], vaddq_f64(vaddq_f64(vmulq_f64(lw, z), vmulq_f64(w, lz)),
                                       vsubq_f64(vmulq_f64(lx, y), vmulq_f64(ly, x))));
    }
    for (; i < n; ++i) multiply_lane(lhs.w[i], lhs.x[i], lhs.y[i], lhs.z[i], acc.w[i], acc.x[i], acc.y[i], acc.z[i]);
}

void overlap_fidelity_neon(const Quat& t, const Su2Batch& acc, std::span<double> out) {
    const std::size_t n = out.size();
    const float64x2_t one = vdupq_n_f64(1.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t d = vaddq_f64(vmulq_f64(vdupq_n_f64(t.w), vld1q_f64(&acc.w[i])),
                                  vmulq_f64(vdupq_n_f64(t.x), vld1q_f64(&acc.x[i])));
        d = vaddq_f64(d, vmulq_f64(vdupq_n_f64(t.y), vld1q_f64(&acc.y[i])));
        d = vaddq_f64(d, vmulq_f64(vdupq_n_f64(t.z), vld1q_f64(&acc.z[i])));
        vst1q_f64(&out[i], vminq_f64(vabsq_f64(d), one));
    }
    for (; i < n; ++i) out[i] = overlap_lane(t, acc.w[i], acc.x[i], acc.y[i], acc.z[i]);
}

}  // namespace pulsesmith::kernels::detail
