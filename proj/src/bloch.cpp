#include "pulsesmith/bloch.hpp"

#include <cmath>

#include "pulsesmith/error.hpp"

namespace pulsesmith {

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double distance(const BlochVector& a, const BlochVector& b) {
    return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) + (a.z - b.z) * (a.z - b.z));
}

BlochVector apply_to_state(const Unitary2& u, const BlochVector& r) {
    if (std::abs(r.norm() - 1.0) > 1e-10) throw_validation("Bloch vector must have unit norm (pure state)");
    if (!u.is_unitary(1e-10)) throw_validation("non-unitary operand");
    const Mat2 rho = cplx{0.5} * (kIdentity + cplx{r.x} * kPauliX + cplx{r.y} * kPauliY + cplx{r.z} * kPauliZ);
    const Mat2 evolved = u * rho * u.adjoint();
    return {(evolved * kPauliX).trace().real(), (evolved * kPauliY).trace().real(), (evolved * kPauliZ).trace().real()};
}

Trajectory trajectory(const PulseSequence& seq, const ErrorPair& err, const BlochVector& initial,
                      std::size_t samples_per_pulse) {
    if (samples_per_pulse < 1) throw_validation("samples per pulse must be at least 1");
    if (std::abs(initial.norm() - 1.0) > 1e-10) throw_validation("initial Bloch vector must have unit norm");

    Trajectory traj{seq.family, seq.target, err, samples_per_pulse, {}};
    traj.points.reserve(seq.size() * samples_per_pulse + 1);
    traj.points.push_back({0, 0.0, initial});

    const double m = static_cast<double>(samples_per_pulse);
    Unitary2 completed = kIdentity;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const Pulse& p = seq.pulses[i];
        for (std::size_t j = 1; j <= samples_per_pulse; ++j) {
            const double fraction = static_cast<double>(j) / m;
            const Unitary2 partial = rotation_with_error(Pulse(fraction * p.theta(), p.phi()), err) * completed;
            traj.points.push_back({i, fraction, apply_to_state(partial, initial)});
        }
        completed = rotation_with_error(p, err) * completed;
    }
    return traj;
}

}  // namespace pulsesmith
