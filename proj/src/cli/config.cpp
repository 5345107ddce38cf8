#include <charconv>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "pulsesmith/cli.hpp"
#include "pulsesmith/error.hpp"

namespace pulsesmith::cli {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t at = text.find(sep, start);
        parts.emplace_back(text.substr(start, at == std::string_view::npos ? text.npos : at - start));
        if (at == std::string_view::npos) break;
        start = at + 1;
    }
    return parts;
}

std::vector<double> default_time_compare_thetas() {
    std::vector<double> thetas;
    for (int j = 1; j <= 256; ++j) thetas.push_back(kPi * j / 256.0);
    return thetas;
}

}  // namespace

std::string_view to_string(Command command) {
    switch (command) {
        case Command::Synth: return "synth";
        case Command::Verify: return "verify";
        case Command::Grid: return "grid";
        case Command::TimeCompare: return "timecompare";
        case Command::Trajectory: return "trajectory";
    }
    return "synth";
}

unsigned threads_from_env() {
    const char* env = std::getenv("PULSESMITH_THREADS");
    if (env == nullptr || *env == '\0') return 0;
    unsigned n = 0;
    const std::string_view s(env);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), n);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw_validation("PULSESMITH_THREADS must be a non-negative integer");
    }
    return n;
}

RunConfig make_config(Command command, const RawOptions& raw) {
    RunConfig cfg;
    cfg.command = command;
    std::vector<std::string> problems;
    auto attempt = [&](const std::function<void()>& step) {
        try {
            step();
        } catch (const Error& e) {
            problems.emplace_back(e.what());
        }
    };

    const bool from_file = !raw.sequence_file.empty();
    const bool needs_sequence = command != Command::TimeCompare;
    if (from_file) {
        cfg.sequence_file = raw.sequence_file;
        if (!raw.family.empty()) problems.emplace_back("--family and --sequence-file are mutually exclusive");
        if (!raw.theta.empty()) problems.emplace_back("--theta and --sequence-file are mutually exclusive");
        if (command == Command::Synth) problems.emplace_back("synth builds sequences and does not take --sequence-file");
    } else if (needs_sequence) {
        if (raw.family.empty()) {
            problems.emplace_back("--family is required");
        } else {
            attempt([&] {
                cfg.family = parse_family(raw.family);
                if (*cfg.family == Family::Custom) throw_validation("family 'custom' is only available via --sequence-file");
            });
        }
        if (raw.theta.empty()) {
            problems.emplace_back("--theta is required");
        } else {
            attempt([&] { cfg.theta = AngleExpr::parse(raw.theta); });
        }
    }
    attempt([&] { cfg.phi = AngleExpr::parse(raw.phi); });
    if (!raw.out.empty()) cfg.out = raw.out;

    const bool csv_default = command == Command::Grid || command == Command::TimeCompare || command == Command::Trajectory;
    cfg.format = csv_default ? OutputFormat::Csv : OutputFormat::Json;
    if (raw.format == "json") {
        cfg.format = OutputFormat::Json;
    } else if (raw.format == "csv") {
        if (!csv_default) problems.emplace_back(std::string(to_string(command)) + " only writes json");
        cfg.format = OutputFormat::Csv;
    } else if (!raw.format.empty()) {
        problems.emplace_back("--format must be json or csv");
    }

    switch (command) {
        case Command::Grid:
            if (!raw.eps.empty()) attempt([&] { cfg.eps_axis = parse_axis(raw.eps); });
            if (!raw.f.empty()) attempt([&] { cfg.f_axis = parse_axis(raw.f); });
            break;
        case Command::Trajectory: {
            if (!raw.eps.empty()) attempt([&] { cfg.err.epsilon = AngleExpr::parse(raw.eps).radians; });
            if (!raw.f.empty()) attempt([&] { cfg.err.f = AngleExpr::parse(raw.f).radians; });
            std::size_t samples = 0;
            const auto res = std::from_chars(raw.samples.data(), raw.samples.data() + raw.samples.size(), samples);
            if (res.ec != std::errc{} || res.ptr != raw.samples.data() + raw.samples.size() || samples < 1) {
                problems.emplace_back("--samples must be a positive integer");
            } else {
                cfg.samples = samples;
            }
            const std::vector<std::string> parts = split(raw.initial, ',');
            if (parts.size() != 3) {
                problems.emplace_back("--initial must be x,y,z");
            } else {
                attempt([&] {
                    cfg.initial = {AngleExpr::parse(parts[0]).radians, AngleExpr::parse(parts[1]).radians,
                                   AngleExpr::parse(parts[2]).radians};
                    if (std::abs(cfg.initial.norm() - 1.0) > 1e-10) throw_validation("--initial must be a unit vector");
                });
            }
            break;
        }
        case Command::Verify:
            if (!raw.ray.empty()) {
                if (raw.ray == "eps" || raw.ray == "f" || raw.ray == "mixed") {
                    cfg.rays = {raw.ray};
                } else {
                    problems.emplace_back("--ray must be eps, f or mixed");
                }
            }
            break;
        case Command::TimeCompare:
            if (!raw.thetas.empty() && !raw.theta_grid.empty()) {
                problems.emplace_back("--thetas and --theta-grid are mutually exclusive");
            } else if (!raw.thetas.empty()) {
                for (const std::string& part : split(raw.thetas, ',')) {
                    attempt([&] { cfg.theta_values.push_back(AngleExpr::parse(part).radians); });
                }
            } else if (!raw.theta_grid.empty()) {
                attempt([&] { cfg.theta_values = parse_axis(raw.theta_grid).values(); });
            } else {
                cfg.theta_values = default_time_compare_thetas();
            }
            break;
        case Command::Synth:
            cfg.dump_matrix = raw.dump_matrix;
            break;
    }

    if (!problems.empty()) {
        std::ostringstream msg;
        msg << "invalid " << to_string(command) << " options:";
        for (const std::string& p : problems) msg << "\n  - " << p;
        throw_validation(msg.str());
    }
    return cfg;
}

}  // namespace pulsesmith::cli
