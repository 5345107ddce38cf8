#pragma once

#include <cstddef>
#include <vector>

#include "pulsesmith/sequences.hpp"

namespace pulsesmith {

/// Expectation values (<sigma_x>, <sigma_y>, <sigma_z>) of a pure state.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;

    double norm() const;
    static BlochVector north_pole() { return {0.0, 0.0, 1.0}; }
    static BlochVector south_pole() { return {0.0, 0.0, -1.0}; }
};

double distance(const BlochVector& a, const BlochVector& b);

/// Bloch vector of U rho U^dagger with rho = (I + r.sigma) / 2.
/// `r` must be a unit vector to 1e-10.
BlochVector apply_to_state(const Unitary2& u, const BlochVector& r);

struct TrajectoryPoint {
    std::size_t pulse_index;  // 0-based; the initial point carries index 0
    double fraction;          // elapsed fraction of that pulse, in [0, 1]
    BlochVector bloch;
};

struct Trajectory {
    Family family;
    Pulse target;
    ErrorPair err;
    std::size_t samples_per_pulse;
    /// k * samples_per_pulse + 1 points, starting at the initial state.
    std::vector<TrajectoryPoint> points;
};

/// Samples the state after each pulse fraction j/m, j = 1..m, for every pulse.
/// Inside a pulse the angle grows linearly in time while the error model is
/// unchanged (square pulses).
Trajectory trajectory(const PulseSequence& seq, const ErrorPair& err, const BlochVector& initial,
                      std::size_t samples_per_pulse);

}  // namespace pulsesmith
