// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "pulsesmith/kernels.hpp"

namespace pulsesmith::kernels::detail {

void left_multiply_avx2(const Su2Batch& lhs, Su2Batch& acc) {
    const std::size_t n = acc.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d lw = _mm256_loadu_pd(&lhs.w[i]);
        const __m256d lx = _mm256_loadu_pd(&lhs.x[i]);
        const __m256d ly = _mm256_loadu_pd(&lhs.y[i]);
        const __m256d lz = _mm256_loadu_pd(&lhs.z[i]);
        const __m256d w = _mm256_loadu_pd(&acc.w[i]);
        const __m256d x = _mm256_loadu_pd(&acc.x[i]);
        const __m256d y = _mm256_loadu_pd(&acc.y[i]);
        const __m256d z = _mm256_loadu_pd(&acc.z[i]);

        const __m256d dot = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(lx, x), _mm256_mul_pd(ly, y)), _mm256_mul_pd(lz, z));
        const __m256d nw = _mm256_sub_pd(_mm256_mul_pd(lw, w), dot);
        const __m256d nx = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(lw, x), _mm256_mul_pd(w, lx)),
                                         _mm256_sub_pd(_mm256_mul_pd(ly, z), _mm256_mul_pd(lz, y)));
        const __m256d ny = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(lw, y), _mm256_mul_pd(w, ly)),
                                         _mm256_sub_pd(_mm256_mul_pd(lz, x), _mm256_mul_pd(lx, z)));
        const __m256d nz = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(lw, z), _mm256_mul_pd(w, lz)),
                                         _mm256_sub_pd(_mm256_mul_pd(lx, y), _mm256_mul_pd(ly, x)));

        _mm256_storeu_pd(&acc.w[i], nw);
        _mm256_storeu_pd(&acc.x[i], nx);
        _mm256_storeu_pd(&acc.y[i], ny);
        _mm256_storeu_pd(&acc.z[i], nz);
    }
    for (; i < n; ++i) multiply_lane(lhs.w[i], lhs.x[i], lhs.y[i], lhs.z[i], acc.w[i], acc.x[i], acc.y[i], acc.z[i]);
}

void overlap_fidelity_avx2(const Quat& t, const Su2Batch& acc, std::span<double> out) {
    const std::size_t n = out.size();
    const __m256d tw = _mm256_set1_pd(t.w);
    const __m256d tx = _mm256_set1_pd(t.x);
    const __m256d ty = _mm256_set1_pd(t.y);
    const __m256d tz = _mm256_set1_pd(t.z);
    const __m256d sign = _mm256_set1_pd(-0.0);
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_add_pd(_mm256_mul_pd(tw, _mm256_loadu_pd(&acc.w[i])), _mm256_mul_pd(tx, _mm256_loadu_pd(&acc.x[i])));
        d = _mm256_add_pd(d, _mm256_mul_pd(ty, _mm256_loadu_pd(&acc.y[i])));
        d = _mm256_add_pd(d, _mm256_mul_pd(tz, _mm256_loadu_pd(&acc.z[i])));
        _mm256_storeu_pd(&out[i], _mm256_min_pd(_mm256_andnot_pd(sign, d), one));
    }
    for (; i < n; ++i) out[i] = overlap_lane(t, acc.w[i], acc.x[i], acc.y[i], acc.z[i]);
}

}  // namespace pulsesmith::kernels::detail
