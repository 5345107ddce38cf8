#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pulsesmith/su2.hpp"

namespace pulsesmith {

enum class Family { Elementary, Scrofulous, Scorbutus, Skinsc, Custom };

std::string_view to_string(Family family);
/// Throws Error(Validation) for unknown names.
Family parse_family(std::string_view name);

/// Ordered pulses (index 0 applied first) implementing `target`.
struct PulseSequence {
    Family family = Family::Custom;
    Pulse target;
    std::vector<Pulse> pulses;

    std::size_t size() const { return pulses.size(); }
    /// Pulse i equals pulse k-1-i exactly, in both angle and phase.
    bool is_palindromic() const;
};

/// Location of the first interior minimum of sin(x)/x; the inverse below is
/// defined on [0, x_min] where sinc is strictly decreasing.
inline constexpr double kSincMinimumArg = 4.4934094579090641753;

double sinc(double x);

/// Inverse of sinc on [0, kSincMinimumArg], by bisection.
/// Domain (sinc(x_min), 1]; throws "arcsinc argument out of branch range" otherwise.
double arcsinc(double y);

/// Off-resonance compensation angle for a switchback built on a SCROFULOUS
/// seed with outer angle `theta1`:
///   cos(theta_r) = (1 - pi sin^2(theta1/2) / theta1) / 2,  theta_r in [0, pi].
double theta_r_from_condition(double theta1);

/// (theta)_phi -> (theta_r)_{phi+pi} (theta + 2 theta_r)_phi (theta_r)_{phi+pi}.
/// Exact under pulse-length error alone; changes the off-resonance response.
std::vector<Pulse> switchback_replace(const Pulse& pulse, double theta_r);

PulseSequence elementary(double theta, double phi);
PulseSequence scrofulous(double theta, double phi);
PulseSequence scorbutus(double theta, double phi);
PulseSequence skinsc(double theta, double phi);

/// Dispatches on `family`; Custom is rejected.
PulseSequence build_sequence(Family family, double theta, double phi);

/// L = sum of pulse angles.
double total_time(const PulseSequence& seq);

Unitary2 compose_with_errors(const PulseSequence& seq, const ErrorPair& err);

/// Sign of Re tr(target^dagger U) / 2 at zero error: +1 when the sequence
/// reproduces the target exactly, -1 when it lands on -target. Zero when the
/// sequence does not implement the target at all.
int global_phase_sign(const PulseSequence& seq);

}  // namespace pulsesmith
