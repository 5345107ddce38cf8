#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "pulsesmith/cli.hpp"
#include "pulsesmith/error.hpp"
#include "pulsesmith/format.hpp"

namespace pulsesmith::cli {

namespace {

constexpr double kSlopeTolerance = 0.3;
constexpr double kResidualTolerance = 1e-10;
constexpr double kZeroErrorTolerance = 1e-10;

PulseSequence load_sequence(const RunConfig& cfg) {
    if (cfg.sequence_file) {
        std::ifstream in(*cfg.sequence_file);
        if (!in) throw Error(ErrorKind::Io, "cannot read sequence file '" + *cfg.sequence_file + "'");
        json doc;
        try {
            in >> doc;
        } catch (const json::exception& e) {
            throw_validation("sequence file '" + *cfg.sequence_file + "' is not valid JSON: " + e.what());
        }
        return sequence_from_json(doc);
    }
    return build_sequence(*cfg.family, cfg.theta->radians, cfg.phi.radians);
}

Ray ray_by_name(const std::string& name) {
    if (name == "eps") return Ray::pulse_length();
    if (name == "f") return Ray::off_resonance();
    return Ray::mixed();
}

std::optional<double> expected_slope(Family family, const std::string& ray) {
    switch (family) {
        case Family::Elementary: return 2.0;
        case Family::Scrofulous: return ray == "eps" ? 4.0 : 2.0;
        case Family::Scorbutus:
        case Family::Skinsc: return 4.0;
        case Family::Custom: return std::nullopt;
    }
    return std::nullopt;
}

bool has_symmetric_form(const PulseSequence& seq) { return seq.size() % 2 == 1 && seq.is_palindromic(); }

// Returns the exit code; the document goes to `out`, the one-line summary to `err`.
int run_verify(const RunConfig& cfg, const PulseSequence& seq, json& doc, std::ostream& err) {
    bool pass = true;
    const bool checked = seq.family != Family::Custom;
    std::ostringstream summary;
    summary << std::setprecision(4) << std::fixed;

    const double f0 = gate_fidelity(rotation(seq.target), compose_with_errors(seq, {}));
    if (f0 < 1.0 - kZeroErrorTolerance) pass = false;
    doc = {{"family", std::string(to_string(seq.family))},
           {"target", to_json(seq.target)},
           {"total_time", total_time(seq)},
           {"zero_error_fidelity", f0},
           {"global_phase_sign", global_phase_sign(seq)}};

    json rays = json::array();
    for (const std::string& name : cfg.rays) {
        json entry{{"name", name}};
        const std::optional<double> expected = expected_slope(seq.family, name);
        entry["expected_slope"] = expected ? json(*expected) : json(nullptr);
        try {
            const SlopeReport report = certify_ray(seq, ray_by_name(name), default_ray_scales());
            entry["report"] = to_json(report);
            const bool ok = !expected || std::abs(report.fitted_slope - *expected) <= kSlopeTolerance;
            entry["pass"] = ok;
            pass = pass && ok;
            summary << ' ' << name << '=' << report.fitted_slope;
        } catch (const Error& e) {
            entry["error"] = e.what();
            entry["pass"] = false;
            pass = false;
            summary << ' ' << name << "=fit-failed(" << e.what() << ')';
        }
        rays.push_back(entry);
    }
    doc["rays"] = rays;

    if (has_symmetric_form(seq)) {
        const OreResidualReport ore = symmetric_ore_residual(seq);
        doc["ore_residual"] = to_json(ore);
        summary << std::scientific << std::setprecision(3) << " residual=" << ore.residual;
        if (seq.family == Family::Scorbutus && std::abs(ore.residual) > kResidualTolerance) pass = false;
    } else {
        doc["ore_residual"] = nullptr;
    }

    const std::string status = !checked ? "REPORT" : (pass ? "PASS" : "FAIL");
    doc["status"] = status;
    err << status << ' ' << to_string(seq.family) << " theta=" << format_angle(seq.target.theta()) << summary.str()
        << '\n';
    return checked && !pass ? kExitVerifyFailed : kExitOk;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ostringstream body;
    int code = kExitOk;

    switch (cfg.command) {
        case Command::Synth: {
            const PulseSequence seq = load_sequence(cfg);
            json doc = to_json(seq);
            if (cfg.dump_matrix) doc["matrix"] = to_json(compose_with_errors(seq, {}));
            body << doc.dump(2) << '\n';
            break;
        }
        case Command::Verify: {
            json doc;
            code = run_verify(cfg, load_sequence(cfg), doc, err);
            body << doc.dump(2) << '\n';
            break;
        }
        case Command::Grid: {
            const FidelityGrid grid = fidelity_grid(load_sequence(cfg), cfg.eps_axis, cfg.f_axis, cfg.threads);
            if (cfg.format == OutputFormat::Csv) {
                write_grid_csv(body, grid);
            } else {
                body << to_json(grid).dump() << '\n';
            }
            break;
        }
        case Command::TimeCompare: {
            const std::vector<TimeCompareRow> rows = time_compare(cfg.theta_values, cfg.phi.radians);
            if (cfg.format == OutputFormat::Csv) {
                write_time_compare_csv(body, rows);
            } else {
                json arr = json::array();
                for (const TimeCompareRow& r : rows) {
                    arr.push_back({{"theta", r.theta},
                                   {"L_scorbutus", r.scorbutus ? json(*r.scorbutus) : json(nullptr)},
                                   {"L_skinsc", r.skinsc ? json(*r.skinsc) : json(nullptr)},
                                   {"error", r.error}});
                }
                body << arr.dump(2) << '\n';
            }
            break;
        }
        case Command::Trajectory: {
            const Trajectory traj = trajectory(load_sequence(cfg), cfg.err, cfg.initial, cfg.samples);
            if (cfg.format == OutputFormat::Csv) {
                write_trajectory_csv(body, traj);
            } else {
                body << to_json(traj).dump(2) << '\n';
            }
            break;
        }
    }

    if (cfg.out) {
        std::ofstream file(*cfg.out, std::ios::binary);
        if (!file) throw Error(ErrorKind::Io, "cannot write output file '" + *cfg.out + "'");
        file << body.str();
        if (!file) throw Error(ErrorKind::Io, "failed writing output file '" + *cfg.out + "'");
    } else {
        out << body.str();
    }
    return code;
}

}  // namespace

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(cfg, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::Io ? kExitIo : kExitValidation;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Composite-pulse synthesis and robustness verification"};
    app.require_subcommand(1);

    struct Sub {
        Command command;
        CLI::App* app;
        RawOptions raw;
    };
    std::vector<Sub> subs;
    subs.reserve(5);
    const std::vector<std::pair<Command, std::string>> commands{
        {Command::Synth, "Build a pulse sequence for a target rotation"},
        {Command::Verify, "Certify robustness orders by log-log infidelity slopes"},
        {Command::Grid, "Gate fidelity over an (epsilon, f) grid"},
        {Command::TimeCompare, "Total operation time of scorbutus vs skinsc"},
        {Command::Trajectory, "Bloch-sphere trajectory under a sequence"},
    };
    for (const auto& [command, description] : commands) {
        subs.push_back({command, app.add_subcommand(std::string(to_string(command)), description), {}});
        Sub& s = subs.back();
        RawOptions& r = s.raw;
        CLI::App* sub = s.app;
        sub->add_option("--phi", r.phi, "Target phase (radians or pi expression)");
        sub->add_option("--out", r.out, "Write output to this path instead of stdout");
        sub->add_option("--format", r.format, "json or csv");
        if (command != Command::TimeCompare) {
            sub->add_option("--family", r.family, "elementary | scrofulous | scorbutus | skinsc");
            sub->add_option("--theta", r.theta, "Target angle (radians or pi expression)");
        }
        if (command != Command::Synth && command != Command::TimeCompare) {
            sub->add_option("--sequence-file", r.sequence_file, "Load a pulse sequence JSON instead of building one");
        }
        switch (command) {
            case Command::Synth:
                sub->add_flag("--dump-matrix", r.dump_matrix, "Include the zero-error composed matrix");
                break;
            case Command::Verify:
                sub->add_option("--ray", r.ray, "eps | f | mixed (default: all three)");
                break;
            case Command::Grid:
                sub->add_option("--eps", r.eps, "epsilon axis min:max:count");
                sub->add_option("--f", r.f, "f axis min:max:count");
                break;
            case Command::TimeCompare:
                sub->add_option("--thetas", r.thetas, "Comma-separated target angles");
                sub->add_option("--theta-grid", r.theta_grid, "Target angles as min:max:count");
                break;
            case Command::Trajectory:
                sub->add_option("--eps", r.eps, "Pulse-length error");
                sub->add_option("--f", r.f, "Off-resonance error");
                sub->add_option("--samples", r.samples, "Samples per pulse");
                sub->add_option("--initial", r.initial, "Initial Bloch vector x,y,z");
                break;
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    for (const Sub& s : subs) {
        if (!s.app->parsed()) continue;
        try {
            RunConfig cfg = make_config(s.command, s.raw);
            cfg.threads = threads_from_env();
            return execute(cfg, out, err);
        } catch (const Error& e) {
            err << "error: " << e.what() << '\n';
            return kExitValidation;
        }
    }
    return kExitValidation;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"pulsesmith"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace pulsesmith::cli
