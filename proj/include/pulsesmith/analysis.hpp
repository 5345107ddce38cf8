#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pulsesmith/sequences.hpp"

namespace pulsesmith {

/// Direction in the (epsilon, f) plane; normalized to unit length on construction.
class Ray {
public:
    /// Throws Error(Validation) for the zero vector.
    Ray(double d_epsilon, double d_f);

    static Ray pulse_length() { return {1.0, 0.0}; }
    static Ray off_resonance() { return {0.0, 1.0}; }
    static Ray mixed() { return {1.0, 1.0}; }

    double d_epsilon() const { return d_epsilon_; }
    double d_f() const { return d_f_; }
    ErrorPair at(double t) const { return {t * d_epsilon_, t * d_f_}; }

private:
    double d_epsilon_;
    double d_f_;
};

/// Points with infidelity at or below this are treated as numerical noise.
inline constexpr double kInfidelityFloor = 1e-14;

/// 13 log-spaced scales covering [1e-3, 10^-1.5].
std::vector<double> default_ray_scales();

/// 1 - F(compose_with_errors(seq, t * ray), rotation(target)) for each t in [0, 0.5].
std::vector<double> infidelity_ray(const PulseSequence& seq, const Ray& ray, const std::vector<double>& t_values);

struct LogLogFit {
    double slope;
    /// Largest |log(value) - fitted line| over the points used.
    double residual;
    std::size_t points_used;
};

/// Least-squares slope of log(values) against log(t). Points with value <= 1e-14
/// are dropped; fewer than 4 survivors -> Error(Validation, "insufficient dynamic range").
LogLogFit fit_loglog_slope(const std::vector<double>& t_values, const std::vector<double>& values);

struct SlopeReport {
    Ray ray;
    std::vector<double> t_values;
    std::vector<double> infidelities;
    double fitted_slope;
    double fit_residual;
};

SlopeReport certify_ray(const PulseSequence& seq, const Ray& ray, const std::vector<double>& t_values);

enum class ErrorParameter { Epsilon, F };

/// dU/d(param) at zero error: central difference with h = 1e-5 refined once by
/// Richardson extrapolation against h/2.
Mat2 first_order_coefficient(const PulseSequence& seq, ErrorParameter which);

/// alpha_i of the symmetric off-resonance condition for a palindromic sequence of
/// 2k-1 pulses, 1 <= i <= k-1:
///   alpha_i I = X_i + X_i^dagger,
///   X_i = R_1^dag ... R_{i-1}^dag  R_{i+1} ... R_k ... R_2 R_1
/// where R_j is the ideal rotation of (distinct) pulse j and the right-hand
/// factor runs through the sequence from its start to the mirror image of
/// pulse i+1. Returns Re tr(X_i).
double alpha_coefficient(const PulseSequence& seq, std::size_t i);

struct OreResidualReport {
    /// s_i = sin(theta_i / 2), i = 1..k
    std::vector<double> s_values;
    /// alpha_i, i = 1..k-1
    std::vector<double> alpha_values;
    /// sum_{i<k} s_i alpha_i + s_k; zero iff the sequence is first-order robust to f.
    double residual;
};

OreResidualReport symmetric_ore_residual(const PulseSequence& seq);

/// Inclusive linspace: count >= 2 points from min to max.
struct AxisSpec {
    double min;
    double max;
    std::size_t count;

    double at(std::size_t j) const;
    std::vector<double> values() const;
};

struct FidelityGrid {
    Pulse target;
    Family family;
    AxisSpec eps_axis;
    AxisSpec f_axis;
    /// Row-major, rows indexed by f and columns by epsilon.
    std::vector<double> values;

    double at(std::size_t f_index, std::size_t eps_index) const { return values[f_index * eps_axis.count + eps_index]; }
    double mean() const;
};

/// Gate fidelity over the (epsilon, f) grid. Rows are distributed over
/// `threads` workers (0 = hardware concurrency); output is independent of the
/// worker count.
FidelityGrid fidelity_grid(const PulseSequence& seq, const AxisSpec& eps_axis, const AxisSpec& f_axis,
                           unsigned threads = 1);

struct TimeCompareRow {
    double theta;
    std::optional<double> scorbutus;
    std::optional<double> skinsc;
    /// Domain error messages for whichever family failed, empty otherwise.
    std::string error;
};

std::vector<TimeCompareRow> time_compare(const std::vector<double>& theta_values, double phi);

}  // namespace pulsesmith
