#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pulsesmith/cli.hpp"
#include "pulsesmith/error.hpp"
#include "pulsesmith/format.hpp"
#include "test_support.hpp"

using namespace pulsesmith;
using namespace pulsesmith::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return std::string(PULSESMITH_TEST_TMPDIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::vector<double> csv_row(const std::string& line) {
    std::vector<double> v;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) v.push_back(std::stod(cell));
    return v;
}

}  // namespace

TEST_CASE("angle expressions") {
    CHECK(AngleExpr::parse("pi/2").radians == 1.5707963267948966);
    CHECK(AngleExpr::parse("2pi").radians == 2.0 * kPi);
    CHECK(AngleExpr::parse("1.0").radians == 1.0);
    CHECK(AngleExpr::parse("pi").radians == kPi);
    CHECK(AngleExpr::parse("3pi/4").radians == 3.0 * kPi / 4.0);
    CHECK(AngleExpr::parse("-pi/3").radians == -(kPi / 3.0));
    CHECK(AngleExpr::parse("0.5pi/3").radians == 0.5 * kPi / 3.0);
    CHECK(AngleExpr::parse("-0.25").radians == -0.25);
    CHECK(AngleExpr::parse("1e-3").radians == 1e-3);
    CHECK(AngleExpr::parse("pi/2").source == "pi/2");

    for (const char* bad : {"", "-", "pi/", "pi/0", "0pi", "2*pi", "inf", "nan", "pix", "--1", "pi/2/3", "1,5", "x"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(AngleExpr::parse(bad), Error);
    }

    for (int i = 0; i < 2000; ++i) {
        const double x = testing::uniform(-100.0, 100.0) * std::pow(10.0, testing::uniform(-8.0, 8.0));
        CHECK(AngleExpr::parse(format_angle(x)).radians == x);
    }
}

TEST_CASE("axis specs") {
    const AxisSpec a = parse_axis("-0.25:0.25:101");
    CHECK(a.min == -0.25);
    CHECK(a.max == 0.25);
    CHECK(a.count == 101);
    CHECK(parse_axis("pi/256:pi:256").max == kPi);
    for (const char* bad : {"0:1", "0:1:1", "1:0:5", "0:1:x", "a:1:3", "0:1:3:4"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_axis(bad), Error);
    }
}

TEST_CASE("config validation aggregates problems") {
    RawOptions raw;
    raw.theta = "bogus";
    raw.format = "xml";
    try {
        make_config(Command::Synth, raw);
        FAIL("expected validation failure");
    } catch (const Error& e) {
        const std::string what = e.what();
        CHECK(what.find("--family is required") != std::string::npos);
        CHECK(what.find("invalid angle 'bogus'") != std::string::npos);
        CHECK(what.find("--format must be json or csv") != std::string::npos);
    }

    RawOptions traj;
    traj.family = "scorbutus";
    traj.theta = "pi";
    traj.samples = "0";
    traj.initial = "1,1,0";
    CHECK_THROWS_AS(make_config(Command::Trajectory, traj), Error);

    RawOptions ok;
    ok.family = "scorbutus";
    ok.theta = "pi";
    const RunConfig cfg = make_config(Command::Grid, ok);
    CHECK(cfg.format == OutputFormat::Csv);
    CHECK(cfg.eps_axis.count == 101);
}

TEST_CASE("synth") {
    const Result r = invoke({"synth", "--family", "scorbutus", "--theta", "pi", "--phi", "0"});
    REQUIRE(r.code == kExitOk);
    const json doc = json::parse(r.out);
    CHECK(doc["family"] == "scorbutus");
    CHECK(doc["pulses"].size() == 5);
    CHECK(doc["total_time"].get<double>() == doctest::Approx(15.707963).epsilon(1e-7));
    std::vector<std::string> keys;
    for (const auto& [k, v] : doc.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"family", "target", "pulses", "total_time"});

    const Result e = invoke({"synth", "--family", "elementary", "--theta", "pi/2", "--phi", "0"});
    const json edoc = json::parse(e.out);
    REQUIRE(edoc["pulses"].size() == 1);
    CHECK(edoc["pulses"][0]["theta"].get<double>() == 1.5707963267948966);
    CHECK(edoc["pulses"][0]["phi"].get<double>() == 0.0);

    const Result bad = invoke({"synth", "--family", "scrofulous", "--theta", "3.9", "--phi", "0"});
    CHECK(bad.code == kExitValidation);
    CHECK(bad.err.find("arcsinc argument out of branch range") != std::string::npos);

    const Result m = invoke({"synth", "--family", "skinsc", "--theta", "pi", "--dump-matrix"});
    const json mdoc = json::parse(m.out);
    REQUIRE(mdoc.contains("matrix"));
    // zero-error SKinsC at pi lands on +i sigma_x
    CHECK(mdoc["matrix"]["im"][0][1].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mdoc["matrix"]["re"][0][0].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("verify") {
    const Result s = invoke({"verify", "--family", "scorbutus", "--theta", "pi"});
    CHECK(s.code == kExitOk);
    CHECK(s.err.rfind("PASS", 0) == 0);
    const json doc = json::parse(s.out);
    REQUIRE(doc["rays"].size() == 3);
    for (const auto& ray : doc["rays"]) CHECK(std::abs(ray["report"]["fitted_slope"].get<double>() - 4.0) <= 0.3);
    CHECK(std::abs(doc["ore_residual"]["residual"].get<double>()) <= 1e-10);
    CHECK(doc["status"] == "PASS");

    const Result e = invoke({"verify", "--family", "elementary", "--theta", "pi"});
    CHECK(e.code == kExitOk);
    for (const auto& ray : json::parse(e.out)["rays"]) {
        CHECK(std::abs(ray["report"]["fitted_slope"].get<double>() - 2.0) <= 0.3);
    }

    const Result sc = invoke({"verify", "--family", "scrofulous", "--theta", "pi"});
    const json scdoc = json::parse(sc.out);
    CHECK(scdoc["rays"][0]["report"]["fitted_slope"].get<double>() == doctest::Approx(4.0).epsilon(0.075));
    CHECK(scdoc["rays"][1]["report"]["fitted_slope"].get<double>() == doctest::Approx(2.0).epsilon(0.15));
    CHECK(scdoc["ore_residual"]["residual"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));

    const Result k = invoke({"verify", "--family", "skinsc", "--theta", "pi/2", "--ray", "f"});
    CHECK(k.code == kExitOk);
    const json kdoc = json::parse(k.out);
    CHECK(kdoc["rays"].size() == 1);
    CHECK(kdoc["ore_residual"].is_null());
    CHECK(kdoc["global_phase_sign"].get<int>() != 0);
}

TEST_CASE("verify fails for a mislabelled sequence") {
    PulseSequence fake = scrofulous(kPi, 0.0);
    fake.family = Family::Scorbutus;
    const std::string path = temp_path("mislabelled.json");
    std::ofstream(path) << to_json(fake).dump();
    const Result r = invoke({"verify", "--sequence-file", path});
    CHECK(r.code == kExitVerifyFailed);
    CHECK(r.err.rfind("FAIL", 0) == 0);

    fake.family = Family::Custom;
    std::ofstream(path) << to_json(fake).dump();
    const Result custom = invoke({"verify", "--sequence-file", path});
    CHECK(custom.code == kExitOk);
    CHECK(custom.err.rfind("REPORT", 0) == 0);
}

TEST_CASE("synth output round-trips through --sequence-file") {
    for (const char* family : {"elementary", "scrofulous", "scorbutus", "skinsc"}) {
        const std::string path = temp_path(std::string("roundtrip_") + family + ".json");
        REQUIRE(invoke({"synth", "--family", family, "--theta", "2.0", "--phi", "0.7", "--out", path}).code == kExitOk);
        const Result direct = invoke({"verify", "--family", family, "--theta", "2.0", "--phi", "0.7"});
        const Result loaded = invoke({"verify", "--sequence-file", path});
        CHECK(direct.out == loaded.out);
        CHECK(direct.err == loaded.err);
    }
}

TEST_CASE("grid") {
    const Result r = invoke({"grid", "--family", "elementary", "--theta", "pi", "--eps", "-0.25:0.25:101", "--f",
                             "-0.25:0.25:101"});
    REQUIRE(r.code == kExitOk);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 10202);
    CHECK(rows[0] == "epsilon,f,fidelity");
    const auto center = csv_row(rows[1 + 50 * 101 + 50]);
    CHECK(center[0] == 0.0);
    CHECK(center[1] == 0.0);
    CHECK(center[2] == 1.0);
    const auto near = csv_row(rows[1 + 70 * 101 + 70]);
    CHECK(near[0] == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(near[2] == doctest::Approx(0.98135).epsilon(1e-4));

    const Result s = invoke({"grid", "--family", "scorbutus", "--theta", "pi/2", "--eps", "-0.25:0.25:101", "--f",
                             "-0.25:0.25:101"});
    const Result base = invoke({"grid", "--family", "elementary", "--theta", "pi/2"});
    CHECK(csv_row(lines(s.out)[1 + 70 * 101 + 70])[2] > csv_row(lines(base.out)[1 + 70 * 101 + 70])[2]);

    const Result j = invoke({"grid", "--family", "scorbutus", "--theta", "pi", "--eps", "-0.1:0.1:3", "--f",
                             "0:0.2:2", "--format", "json"});
    const json doc = json::parse(j.out);
    CHECK(doc["values"].size() == 6);
    CHECK(doc["eps_axis"]["count"] == 3);
}

TEST_CASE("grid output is deterministic across worker counts") {
    std::vector<std::string> outputs;
    for (const char* threads : {"1", "4", "1", "3"}) {
        ::setenv("PULSESMITH_THREADS", threads, 1);
        outputs.push_back(invoke({"grid", "--family", "scorbutus", "--theta", "pi/2"}).out);
    }
    ::unsetenv("PULSESMITH_THREADS");
    for (const std::string& o : outputs) CHECK(o == outputs.front());

    ::setenv("PULSESMITH_THREADS", "many", 1);
    CHECK(invoke({"grid", "--family", "scorbutus", "--theta", "pi/2"}).code == kExitValidation);
    ::unsetenv("PULSESMITH_THREADS");
}

TEST_CASE("timecompare") {
    const Result r = invoke({"timecompare"});
    REQUIRE(r.code == kExitOk);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 257);
    CHECK(rows[0] == "theta,L_scorbutus,L_skinsc,error");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto v = csv_row(rows[i]);
        CHECK(v[1] < v[2]);
    }
    const auto last = csv_row(rows.back());
    CHECK(last[0] == kPi);
    CHECK(last[1] == doctest::Approx(15.70796).epsilon(1e-6));
    CHECK(last[2] == doctest::Approx(19.89675).epsilon(1e-6));
    const auto half = csv_row(rows[128]);
    CHECK(half[0] == kPi / 2);
    CHECK(half[1] == doctest::Approx(13.67321).epsilon(1e-6));
    CHECK(half[2] == doctest::Approx(18.97488).epsilon(1e-6));

    const Result listed = invoke({"timecompare", "--thetas", "pi/2,3.9"});
    const auto lrows = lines(listed.out);
    REQUIRE(lrows.size() == 3);
    CHECK(lrows[2].find("arcsinc") != std::string::npos);
}

TEST_CASE("trajectory") {
    const Result r = invoke({"trajectory", "--family", "scorbutus", "--theta", "pi", "--eps", "0.1", "--f", "0.1",
                             "--samples", "64"});
    REQUIRE(r.code == kExitOk);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 322);
    CHECK(rows[0] == "pulse_index,fraction,x,y,z");
    CHECK(csv_row(rows[1]) == std::vector<double>{0, 0, 0, 0, 1});

    const Result e = invoke({"trajectory", "--family", "elementary", "--theta", "pi"});
    const auto erows = lines(e.out);
    const auto last = csv_row(erows.back());
    CHECK(std::abs(last[4] + 1.0) < 1e-10);

    const Result b = invoke({"trajectory", "--family", "elementary", "--theta", "pi", "--eps", "0.1", "--f", "0.1",
                             "--samples", "64"});
    auto south_gap = [](const std::vector<double>& p) { return std::hypot(p[2], p[3], p[4] + 1.0); };
    CHECK(south_gap(csv_row(rows.back())) < south_gap(csv_row(lines(b.out).back())));

    const Result j = invoke({"trajectory", "--family", "scorbutus", "--theta", "pi", "--samples", "2", "--format",
                             "json", "--initial", "1,0,0"});
    const json doc = json::parse(j.out);
    CHECK(doc["points"].size() == 11);
    CHECK(doc["family"] == "scorbutus");
    CHECK(doc["err"]["epsilon"] == 0.0);
}

TEST_CASE("exit codes") {
    CHECK(invoke({}).code == kExitValidation);
    CHECK(invoke({"bogus"}).code == kExitValidation);
    CHECK(invoke({"synth", "--family", "scorbutus"}).code == kExitValidation);
    CHECK(invoke({"synth", "--family", "scorbutus", "--theta", "pi", "--format", "csv"}).code == kExitValidation);
    CHECK(invoke({"grid", "--family", "scorbutus", "--theta", "pi", "--out", "/nonexistent-dir/grid.csv"}).code ==
          kExitIo);
    CHECK(invoke({"verify", "--sequence-file", "/nonexistent-dir/seq.json"}).code == kExitIo);

    const std::string path = temp_path("not_json.json");
    std::ofstream(path) << "{ not json";
    CHECK(invoke({"verify", "--sequence-file", path}).code == kExitValidation);
    CHECK(invoke({"--help"}).code == kExitOk);
}
