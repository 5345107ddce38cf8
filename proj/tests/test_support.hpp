#pragma once

// Independent oracles used by the unit and acceptance tests. Nothing here
// calls into the closed forms under test.

#include <cmath>
#include <random>

#include "pulsesmith/su2.hpp"

namespace pulsesmith::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(0x5eedULL);
    return engine;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

/// exp(M) by scaling and squaring with a 30-term Taylor series.
inline Mat2 expm(const Mat2& m) {
    int squarings = 0;
    double norm = m.frobenius_norm();
    Mat2 scaled = m;
    while (norm > 0.25) {
        scaled = cplx{0.5} * scaled;
        norm *= 0.5;
        ++squarings;
    }
    Mat2 term = kIdentity;
    Mat2 sum = kIdentity;
    for (int n = 1; n <= 30; ++n) {
        term = cplx{1.0 / n} * (term * scaled);
        sum = sum + term;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

/// Generator route to the erroneous rotation: exp(-i theta (1+eps)(n_phi.sigma + f sigma_z) / 2).
inline Mat2 erroneous_rotation_oracle(double theta, double phi, double eps, double f) {
    const Mat2 h = cplx{0.5 * std::cos(phi)} * kPauliX + cplx{0.5 * std::sin(phi)} * kPauliY + cplx{0.5 * f} * kPauliZ;
    return expm(cplx{0.0, -theta * (1.0 + eps)} * h);
}

inline Mat2 random_su2() {
    // Haar-ish: normalized Gaussian quaternion
    std::normal_distribution<double> g;
    double w = g(rng()), x = g(rng()), y = g(rng()), z = g(rng());
    const double n = std::sqrt(w * w + x * x + y * y + z * z);
    w /= n, x /= n, y /= n, z /= n;
    return {cplx{w, -z}, cplx{-y, -x}, cplx{y, -x}, cplx{w, z}};
}

/// Phase-insensitive distance: min over global sign of the Frobenius distance.
inline double distance_up_to_sign(const Mat2& a, const Mat2& b) {
    return std::min((a - b).frobenius_norm(), (a + b).frobenius_norm());
}

}  // namespace pulsesmith::testing
