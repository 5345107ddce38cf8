#include "pulsesmith/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "pulsesmith/error.hpp"
#include "pulsesmith/kernels.hpp"

namespace pulsesmith {

namespace {

Mat2 compose_prefix(const PulseSequence& seq, std::size_t count) {
    Mat2 acc = kIdentity;
    for (std::size_t j = 0; j < count; ++j) acc = rotation(seq.pulses[j]) * acc;
    return acc;
}

std::size_t distinct_pulse_count(const PulseSequence& seq) {
    const std::size_t n = seq.size();
    if (n == 0 || n % 2 == 0 || !seq.is_palindromic()) {
        throw_validation("symmetric off-resonance analysis needs a palindromic sequence of odd length");
    }
    return (n + 1) / 2;
}

void fill_grid_row(const PulseSequence& seq, const kernels::KernelTable& table, const kernels::Quat& target,
                   std::span<const double> eps, double f, std::span<double> out) {
    kernels::Su2Batch acc(eps.size());
    kernels::Su2Batch step(eps.size());
    for (const Pulse& p : seq.pulses) {
        kernels::fill_rotation_with_error(p, eps, f, step);
        table.left_multiply(step, acc);
    }
    table.overlap_fidelity(target, acc, out);
}

}  // namespace

Ray::Ray(double d_epsilon, double d_f) {
    const double norm = std::hypot(d_epsilon, d_f);
    if (!(norm > 0.0) || !std::isfinite(norm)) throw_validation("ray direction must be a finite non-zero vector");
    d_epsilon_ = d_epsilon / norm;
    d_f_ = d_f / norm;
}

std::vector<double> default_ray_scales() {
    std::vector<double> t(13);
    for (std::size_t j = 0; j < t.size(); ++j) t[j] = std::pow(10.0, -3.0 + 1.5 * static_cast<double>(j) / 12.0);
    return t;
}

std::vector<double> infidelity_ray(const PulseSequence& seq, const Ray& ray, const std::vector<double>& t_values) {
    const Unitary2 ideal = rotation(seq.target);
    std::vector<double> out;
    out.reserve(t_values.size());
    for (double t : t_values) {
        if (!(t >= 0.0 && t <= 0.5)) throw_validation("ray scale t must lie in [0, 0.5]");
        out.push_back(1.0 - gate_fidelity(ideal, compose_with_errors(seq, ray.at(t))));
    }
    return out;
}

LogLogFit fit_loglog_slope(const std::vector<double>& t_values, const std::vector<double>& values) {
    if (t_values.size() != values.size()) throw_validation("t_values and values differ in length");
    std::vector<double> lx;
    std::vector<double> ly;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] > kInfidelityFloor && t_values[i] > 0.0) {
            lx.push_back(std::log(t_values[i]));
            ly.push_back(std::log(values[i]));
        }
    }
    if (lx.size() < 4) throw_validation("insufficient dynamic range");

    const double n = static_cast<double>(lx.size());
    const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
    const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (!(sxx > 0.0)) throw_validation("insufficient dynamic range");
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double residual = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) residual = std::max(residual, std::abs(ly[i] - (intercept + slope * lx[i])));
    return {slope, residual, lx.size()};
}

SlopeReport certify_ray(const PulseSequence& seq, const Ray& ray, const std::vector<double>& t_values) {
    std::vector<double> inf = infidelity_ray(seq, ray, t_values);
    const LogLogFit fit = fit_loglog_slope(t_values, inf);
    return {ray, t_values, std::move(inf), fit.slope, fit.residual};
}

Mat2 first_order_coefficient(const PulseSequence& seq, ErrorParameter which) {
    auto at = [&](double v) {
        return which == ErrorParameter::Epsilon ? compose_with_errors(seq, {v, 0.0}) : compose_with_errors(seq, {0.0, v});
    };
    auto central = [&](double h) { return cplx{1.0 / (2.0 * h)} * (at(h) - at(-h)); };
    constexpr double h = 1e-5;
    const Mat2 coarse = central(h);
    const Mat2 fine = central(0.5 * h);
    return cplx{4.0 / 3.0} * fine - cplx{1.0 / 3.0} * coarse;
}

double alpha_coefficient(const PulseSequence& seq, std::size_t i) {
    const std::size_t k = distinct_pulse_count(seq);
    if (i < 1 || i >= k) throw_validation("alpha index must satisfy 1 <= i <= k-1");
    Mat2 left = kIdentity;
    for (std::size_t j = 0; j + 1 < i; ++j) left = left * rotation(seq.pulses[j]).adjoint();
    const Mat2 right = compose_prefix(seq, seq.size() - i);
    return (left * right).trace().real();
}

OreResidualReport symmetric_ore_residual(const PulseSequence& seq) {
    const std::size_t k = distinct_pulse_count(seq);
    OreResidualReport report;
    for (std::size_t j = 0; j < k; ++j) report.s_values.push_back(std::sin(0.5 * seq.pulses[j].theta()));
    double sum = report.s_values[k - 1];
    for (std::size_t i = 1; i < k; ++i) {
        report.alpha_values.push_back(alpha_coefficient(seq, i));
        sum += report.s_values[i - 1] * report.alpha_values.back();
    }
    report.residual = sum;
    return report;
}

double AxisSpec::at(std::size_t j) const {
    if (j + 1 == count) return max;
    return min + (max - min) * static_cast<double>(j) / static_cast<double>(count - 1);
}

std::vector<double> AxisSpec::values() const {
    std::vector<double> v(count);
    for (std::size_t j = 0; j < count; ++j) v[j] = at(j);
    return v;
}

double FidelityGrid::mean() const {
    return values.empty() ? 0.0 : std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

FidelityGrid fidelity_grid(const PulseSequence& seq, const AxisSpec& eps_axis, const AxisSpec& f_axis, unsigned threads) {
    if (eps_axis.count < 2 || f_axis.count < 2) throw_validation("grid axes need at least 2 points");
    if (seq.pulses.empty()) throw_validation("empty sequence");

    FidelityGrid grid{seq.target, seq.family, eps_axis, f_axis, std::vector<double>(eps_axis.count * f_axis.count)};
    const std::vector<double> eps = eps_axis.values();
    const std::vector<double> fs = f_axis.values();
    const kernels::KernelTable& table = kernels::active_kernels();
    const kernels::Quat target = kernels::to_quat(rotation(seq.target));

    auto run_rows = [&](std::size_t begin, std::size_t end) {
        for (std::size_t row = begin; row < end; ++row) {
            fill_grid_row(seq, table, target, eps, fs[row],
                          std::span<double>(grid.values).subspan(row * eps.size(), eps.size()));
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(threads, fs.size());
    if (workers <= 1) {
        run_rows(0, fs.size());
        return grid;
    }
    std::vector<std::jthread> pool;
    const std::size_t chunk = (fs.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < fs.size(); begin += chunk) {
        pool.emplace_back(run_rows, begin, std::min(fs.size(), begin + chunk));
    }
    pool.clear();
    return grid;
}

std::vector<TimeCompareRow> time_compare(const std::vector<double>& theta_values, double phi) {
    std::vector<TimeCompareRow> rows;
    rows.reserve(theta_values.size());
    for (double theta : theta_values) {
        TimeCompareRow row{theta, std::nullopt, std::nullopt, {}};
        try {
            row.scorbutus = total_time(scorbutus(theta, phi));
        } catch (const Error& e) {
            row.error = std::string("scorbutus: ") + e.what();
        }
        try {
            row.skinsc = total_time(skinsc(theta, phi));
        } catch (const Error& e) {
            row.error += (row.error.empty() ? "" : "; ") + std::string("skinsc: ") + e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace pulsesmith
