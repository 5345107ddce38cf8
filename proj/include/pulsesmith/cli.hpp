#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pulsesmith/analysis.hpp"
#include "pulsesmith/bloch.hpp"

namespace pulsesmith::cli {

/// Angle literal in radians. Accepted forms, with an optional leading '-':
///   1.25   pi   3pi   pi/4   3pi/4   0.5pi/3
struct AngleExpr {
    std::string source;
    double radians = 0.0;

    /// Throws Error(Validation) when `text` does not match the grammar.
    static AngleExpr parse(std::string_view text);
};

/// Shortest decimal that AngleExpr::parse maps back to exactly `radians`.
std::string format_angle(double radians);

/// `min:max:count`, endpoints inclusive; min and max are AngleExprs.
AxisSpec parse_axis(std::string_view text);

enum class Command { Synth, Verify, Grid, TimeCompare, Trajectory };
enum class OutputFormat { Json, Csv };

std::string_view to_string(Command command);

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 2,
    kExitVerifyFailed = 3,
    kExitIo = 4,
};

/// Option strings exactly as given on the command line, before validation.
struct RawOptions {
    std::string family;
    std::string theta;
    std::string phi = "0";
    std::string sequence_file;
    std::string out;
    std::string format;
    std::string eps;
    std::string f;
    std::string ray;
    std::string samples = "64";
    std::string initial = "0,0,1";
    std::string thetas;
    std::string theta_grid;
    bool dump_matrix = false;
};

struct RunConfig {
    Command command = Command::Synth;
    std::optional<Family> family;
    std::optional<AngleExpr> theta;
    AngleExpr phi{"0", 0.0};
    std::optional<std::string> sequence_file;
    std::optional<std::string> out;
    OutputFormat format = OutputFormat::Json;

    AxisSpec eps_axis{-0.25, 0.25, 101};
    AxisSpec f_axis{-0.25, 0.25, 101};
    ErrorPair err;
    std::vector<std::string> rays{"eps", "f", "mixed"};
    std::size_t samples = 64;
    BlochVector initial = BlochVector::north_pole();
    std::vector<double> theta_values;
    bool dump_matrix = false;
    /// 0 means one worker per hardware thread.
    unsigned threads = 0;
};

/// Validates every option and reports all problems in one Error(Validation).
RunConfig make_config(Command command, const RawOptions& raw);

/// Reads PULSESMITH_THREADS; 0 when unset.
unsigned threads_from_env();

/// Runs one validated command. Returns an ExitCode; domain and I/O failures are
/// reported on `err`.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command-line entry point (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pulsesmith::cli
