#include "pulsesmith/sequences.hpp"

#include <cmath>
#include <sstream>

#include "pulsesmith/error.hpp"

namespace pulsesmith {

namespace {

void require_target_angle(double theta) {
    if (!(theta > 0.0 && theta < kTwoPi)) {
        std::ostringstream msg;
        msg << "target angle theta=" << theta << " outside (0, 2*pi)";
        throw_domain(msg.str());
    }
}

double checked_acos(double arg, const char* what) {
    if (!(arg >= -1.0 && arg <= 1.0)) {
        std::ostringstream msg;
        msg << what << " = " << arg << " outside [-1, 1]";
        throw_domain(msg.str());
    }
    return std::acos(arg);
}

}  // namespace

std::string_view to_string(Family family) {
    switch (family) {
        case Family::Elementary: return "elementary";
        case Family::Scrofulous: return "scrofulous";
        case Family::Scorbutus: return "scorbutus";
        case Family::Skinsc: return "skinsc";
        case Family::Custom: return "custom";
    }
    return "custom";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::Elementary, Family::Scrofulous, Family::Scorbutus, Family::Skinsc, Family::Custom}) {
        if (to_string(f) == name) return f;
    }
    throw_validation("unknown family '" + std::string(name) + "'");
}

bool PulseSequence::is_palindromic() const {
    const std::size_t k = pulses.size();
    for (std::size_t i = 0; i < k / 2; ++i) {
        if (!(pulses[i] == pulses[k - 1 - i])) return false;
    }
    return true;
}

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

double arcsinc(double y) {
    static const double floor_value = sinc(kSincMinimumArg);
    if (!(y > floor_value && y <= 1.0)) {
        std::ostringstream msg;
        msg << "arcsinc argument out of branch range (y=" << y << ")";
        throw_domain(msg.str());
    }
    if (y == 1.0) return 0.0;

    double lo = 0.0;
    double hi = kSincMinimumArg;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (sinc(mid) > y) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // return whichever bracket end has the smaller residual
    return std::abs(sinc(lo) - y) <= std::abs(sinc(hi) - y) ? lo : hi;
}

double theta_r_from_condition(double theta1) {
    const double s = std::sin(0.5 * theta1);
    const double ratio = theta1 == 0.0 ? 0.0 : s * s / theta1;
    const double rhs = 0.5 * (1.0 - kPi * ratio);
    if (!(rhs >= -1.0 && rhs <= 1.0)) throw_domain("theta_r condition unsatisfiable");
    return std::acos(rhs);
}

std::vector<Pulse> switchback_replace(const Pulse& pulse, double theta_r) {
    if (!(theta_r >= 0.0)) throw_domain("switchback angle theta_r must be non-negative");
    const double back = pulse.phi() + kPi;
    return {Pulse(theta_r, back), Pulse(pulse.theta() + 2.0 * theta_r, pulse.phi()), Pulse(theta_r, back)};
}

PulseSequence elementary(double theta, double phi) {
    Pulse p(theta, phi);
    return {Family::Elementary, p, {p}};
}

PulseSequence scrofulous(double theta, double phi) {
    require_target_angle(theta);
    const double theta1 = arcsinc(2.0 * std::cos(0.5 * theta) / kPi);
    const double phi1 = phi + checked_acos(-kPi * std::cos(theta1) / (2.0 * theta1 * std::sin(0.5 * theta)),
                                           "scrofulous outer-phase arccos argument -pi cos(theta1)/(2 theta1 sin(theta/2))");
    const double phi2 = phi1 - checked_acos(-kPi / (2.0 * theta1),
                                            "scrofulous inner-phase arccos argument -pi/(2 theta1)");
    const Pulse outer(theta1, phi1);
    return {Family::Scrofulous, Pulse(theta, phi), {outer, Pulse(kPi, phi2), outer}};
}

PulseSequence scorbutus(double theta, double phi) {
    PulseSequence seed = scrofulous(theta, phi);
    const Pulse outer = seed.pulses[0];
    const std::vector<Pulse> middle = switchback_replace(seed.pulses[1], theta_r_from_condition(outer.theta()));
    return {Family::Scorbutus, seed.target, {outer, middle[0], middle[1], middle[2], outer}};
}

PulseSequence skinsc(double theta, double phi) {
    require_target_angle(theta);
    const double half = 0.5 * theta;
    const double shift = std::asin(0.5 * std::sin(half));
    const double short_angle = half - shift;
    const double long_angle = kTwoPi - half - shift;
    const double spread = std::acos(-(kTwoPi - theta) / (4.0 * kPi));
    return {Family::Skinsc,
            Pulse(theta, phi),
            {Pulse(short_angle, phi), Pulse(long_angle, phi + kPi), Pulse(kTwoPi, phi + kPi - spread),
             Pulse(kTwoPi, phi + kPi + spread), Pulse(short_angle, phi + kPi), Pulse(short_angle, phi)}};
}

PulseSequence build_sequence(Family family, double theta, double phi) {
    switch (family) {
        case Family::Elementary: return elementary(theta, phi);
        case Family::Scrofulous: return scrofulous(theta, phi);
        case Family::Scorbutus: return scorbutus(theta, phi);
        case Family::Skinsc: return skinsc(theta, phi);
        case Family::Custom: break;
    }
    throw_validation("custom sequences cannot be synthesized from a target; load them from a file");
}

double total_time(const PulseSequence& seq) {
    double sum = 0.0;
    for (const Pulse& p : seq.pulses) sum += p.theta();
    return sum;
}

Unitary2 compose_with_errors(const PulseSequence& seq, const ErrorPair& err) {
    if (seq.pulses.empty()) throw_validation("empty sequence");
    Unitary2 acc = kIdentity;
    for (const Pulse& p : seq.pulses) acc = rotation_with_error(p, err) * acc;
    return acc;
}

int global_phase_sign(const PulseSequence& seq) {
    const double overlap = (rotation(seq.target).adjoint() * compose_with_errors(seq, {})).trace().real() / 2.0;
    if (overlap > 0.5) return 1;
    if (overlap < -0.5) return -1;
    return 0;
}

}  // namespace pulsesmith
