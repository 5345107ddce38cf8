#include "pulsesmith/format.hpp"

#include <charconv>
#include <ostream>

#include "pulsesmith/error.hpp"

namespace pulsesmith {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

json to_json(const Mat2& m) {
    json re = json::array();
    json im = json::array();
    for (int r = 0; r < 2; ++r) {
        re.push_back({m(r, 0).real(), m(r, 1).real()});
        im.push_back({m(r, 0).imag(), m(r, 1).imag()});
    }
    return {{"re", re}, {"im", im}};
}

json to_json(const Pulse& p) { return {{"theta", p.theta()}, {"phi", p.phi()}}; }

json to_json(const PulseSequence& seq) {
    json pulses = json::array();
    for (const Pulse& p : seq.pulses) pulses.push_back(to_json(p));
    return {{"family", std::string(to_string(seq.family))},
            {"target", to_json(seq.target)},
            {"pulses", pulses},
            {"total_time", total_time(seq)}};
}

json to_json(const SlopeReport& r) {
    return {{"ray", {r.ray.d_epsilon(), r.ray.d_f()}},
            {"t_values", r.t_values},
            {"infidelities", r.infidelities},
            {"fitted_slope", r.fitted_slope},
            {"fit_residual", r.fit_residual}};
}

json to_json(const OreResidualReport& r) {
    return {{"s_values", r.s_values}, {"alpha_values", r.alpha_values}, {"residual", r.residual}};
}

json to_json(const AxisSpec& a) { return {{"min", a.min}, {"max", a.max}, {"count", a.count}}; }

json to_json(const FidelityGrid& g) {
    return {{"family", std::string(to_string(g.family))},
            {"target", to_json(g.target)},
            {"eps_axis", to_json(g.eps_axis)},
            {"f_axis", to_json(g.f_axis)},
            {"values", g.values}};
}

json to_json(const Trajectory& t) {
    json points = json::array();
    for (const TrajectoryPoint& p : t.points) {
        points.push_back({{"pulse_index", p.pulse_index},
                          {"fraction", p.fraction},
                          {"x", p.bloch.x},
                          {"y", p.bloch.y},
                          {"z", p.bloch.z}});
    }
    return {{"family", std::string(to_string(t.family))},
            {"target", to_json(t.target)},
            {"err", {{"epsilon", t.err.epsilon}, {"f", t.err.f}}},
            {"samples_per_pulse", t.samples_per_pulse},
            {"points", points}};
}

PulseSequence sequence_from_json(const json& doc) {
    try {
        PulseSequence seq;
        seq.family = parse_family(doc.at("family").get<std::string>());
        const json& target = doc.at("target");
        seq.target = Pulse(target.at("theta").get<double>(), target.at("phi").get<double>());
        for (const json& p : doc.at("pulses")) seq.pulses.emplace_back(p.at("theta").get<double>(), p.at("phi").get<double>());
        if (seq.pulses.empty()) throw_validation("empty sequence");
        return seq;
    } catch (const json::exception& e) {
        throw_validation(std::string("malformed pulse sequence JSON: ") + e.what());
    }
}

void write_grid_csv(std::ostream& out, const FidelityGrid& g) {
    out << "epsilon,f,fidelity\n";
    for (std::size_t r = 0; r < g.f_axis.count; ++r) {
        const std::string f = format_double(g.f_axis.at(r));
        for (std::size_t c = 0; c < g.eps_axis.count; ++c) {
            out << format_double(g.eps_axis.at(c)) << ',' << f << ',' << format_double(g.at(r, c)) << '\n';
        }
    }
}

void write_trajectory_csv(std::ostream& out, const Trajectory& t) {
    out << "pulse_index,fraction,x,y,z\n";
    for (const TrajectoryPoint& p : t.points) {
        out << p.pulse_index << ',' << format_double(p.fraction) << ',' << format_double(p.bloch.x) << ','
            << format_double(p.bloch.y) << ',' << format_double(p.bloch.z) << '\n';
    }
}

void write_time_compare_csv(std::ostream& out, const std::vector<TimeCompareRow>& rows) {
    out << "theta,L_scorbutus,L_skinsc,error\n";
    for (const TimeCompareRow& row : rows) {
        out << format_double(row.theta) << ',' << (row.scorbutus ? format_double(*row.scorbutus) : "") << ','
            << (row.skinsc ? format_double(*row.skinsc) : "") << ',';
        if (!row.error.empty()) out << '"' << row.error << '"';
        out << '\n';
    }
}

}  // namespace pulsesmith
