#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rfbeats/cli/app.hpp"
#include "rfbeats/cli/config.hpp"
#include "rfbeats/cli/presets.hpp"
#include "rfbeats/cli/runner.hpp"
#include "rfbeats/errors.hpp"

using namespace rfbeats;
using namespace rfbeats::cli;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_app(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& csv) {
    std::vector<std::string> lines;
    std::istringstream is(csv);
    for (std::string line; std::getline(is, line);) {
        if (!line.empty() && line[0] != '#') lines.push_back(line);
    }
    return lines;
}

std::vector<double> parse_row(const std::string& line) {
    std::vector<double> out;
    std::istringstream is(line);
    for (std::string cell; std::getline(is, cell, ',');) out.push_back(std::stod(cell));
    return out;
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("rfbeats_test_" + name);
}

}  // namespace

TEST_CASE("steady and dressed emit JSON with the expected keys", "[cli]") {
    const auto steady = invoke({"steady", "--omega", "9", "--delta-l", "0", "--delta-z", "-8"});
    REQUIRE(steady.code == 0);
    CHECK_THAT(steady.out, ContainsSubstring("\"alpha11\": 0.20849"));

    const auto d = invoke({"dressed", "--omega", "9", "--delta-l", "0", "--delta-z", "-8"});
    REQUIRE(d.code == 0);
    CHECK_THAT(d.out, ContainsSubstring("\"Omega1\": 18.0"));
    CHECK_THAT(d.out, ContainsSubstring("\"Omega2\": 19.697"));
    CHECK_THAT(d.out, ContainsSubstring("\"Omega_av\": 18.848"));
    CHECK_THAT(d.out, ContainsSubstring("\"Omega_beat\": 0.848"));
}

TEST_CASE("g2 CSV layout", "[cli]") {
    const auto r = invoke({"g2", "--omega", "9", "--delta-l", "0", "--delta-z", "-8", "--t-max",
                           "10", "--n-t", "2000"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("# rfbeats g2", 0) == 0);
    CHECK_THAT(r.out, ContainsSubstring("# omega=9 delta_l=0 delta_z=-8"));
    const auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 2001);
    CHECK(lines[0] == "tau,g2");
    const auto row0 = parse_row(lines[1]);
    CHECK(row0[0] == 0.0);
    CHECK(std::abs(row0[1]) < 1e-10);
    CHECK_THAT(lines[1], ContainsSubstring("e+00"));
    CHECK(parse_row(lines.back())[0] == 10.0);
}

TEST_CASE("output is deterministic and the dumped config round-trips", "[cli]") {
    const std::vector<std::string> args = {"qspectrum", "--preset", "fig13e", "--n-w", "201"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    auto dump_args = args;
    dump_args.push_back("--dump-config");
    const auto dumped = invoke(dump_args);
    REQUIRE(dumped.code == 0);
    const auto path = temp_path("roundtrip.json");
    std::ofstream(path) << dumped.out;
    const auto rerun = invoke({"run", "--config", path.string()});
    REQUIRE(rerun.code == 0);
    CHECK(rerun.out == a.out);

    // Dumping the reloaded config is a fixed point.
    const auto again = invoke({"run", "--config", path.string(), "--dump-config"});
    CHECK(again.out == dumped.out);
    std::filesystem::remove(path);
}

TEST_CASE("output file", "[cli]") {
    const auto path = temp_path("out.csv");
    const auto r = invoke({"spectrum", "--omega", "2", "--n-w", "11", "--w-max", "5", "-o",
                           path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    const auto lines = data_lines(ss.str());
    REQUIRE(lines.size() == 12);
    CHECK(lines[0] == "omega,S_inc");
    CHECK_THAT(ss.str(), ContainsSubstring("# coherent_weight="));
    std::filesystem::remove(path);
}

TEST_CASE("exit codes distinguish config and physics errors", "[cli]") {
    const auto unknown = invoke({"evolve", "--preset", "fig99"});
    CHECK(unknown.code == kExitConfigError);
    CHECK_THAT(unknown.err, ContainsSubstring("UnknownPreset"));
    CHECK_THAT(unknown.err, ContainsSubstring("fig13h"));

    CHECK(invoke({"evolve", "--n-t", "1"}).code == kExitConfigError);
    CHECK(invoke({"evolve", "--t-max", "-1"}).code == kExitConfigError);
    CHECK(invoke({"steady", "--omega", "-1"}).code == kExitConfigError);
    CHECK(invoke({"steady", "--bogus"}).code == kExitConfigError);
    CHECK(invoke({}).code == kExitConfigError);
    CHECK(invoke({"run"}).code == kExitConfigError);
    CHECK(invoke({"evolve", "--initial", "ground7"}).code == kExitConfigError);

    const auto vanishing = invoke({"aic", "--omega", "1", "--phi", "0"});
    CHECK(vanishing.code == kExitPhysicsError);
    CHECK_THAT(vanishing.err, ContainsSubstring("VanishingMeanQuadrature"));

    const auto dark = invoke({"g2", "--omega", "0"});
    CHECK(dark.code == kExitPhysicsError);
    CHECK_THAT(dark.err, ContainsSubstring("ZeroIntensity"));

    const auto unphysical = invoke({"evolve", "--initial", "0,0,0.7,0,0,0.7,0,0"});
    CHECK(unphysical.code == kExitPhysicsError);
    CHECK_THAT(unphysical.err, ContainsSubstring("UnphysicalInitialState"));

    CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("initial state parsing", "[cli]") {
    CHECK(std::get<InitialPreset>(parse_initial("equal-ground")) == InitialPreset::EqualGround);
    const auto s = std::get<ExplicitState>(parse_initial("0,0.1:0.2,0,0,0.1:-0.2,0.5,0,0.5"));
    CHECK(s[1] == cplx(0.1, 0.2));
    CHECK(s[7] == cplx(0.5));
    CHECK_THROWS_AS(parse_initial("1,2,3"), ConfigError);
    CHECK_THROWS_AS(parse_initial("0,0,0,0,0,0,0,0,0"), ConfigError);
    CHECK(parse_initial(format_initial(s)) == InitialSpec(s));

    const auto r = invoke({"evolve", "--initial", "0,0,0.5,0,0,0.5,0,0", "--n-t", "3"});
    CHECK(r.code == 0);
}

TEST_CASE("config loading rejects unknown keys", "[cli]") {
    CHECK_THROWS_AS(load_config(R"({"command": "g2", "omegaa": 1})"), ConfigError);
    CHECK_THROWS_AS(load_config(R"({"params": {"omega": "x"}})"), ConfigError);
    CHECK_THROWS_AS(load_config("{"), ConfigError);
    const RunConfig c = load_config(R"({"command": "g2", "params": {"omega": 3}, "n_t": 7})");
    CHECK(c.command == Command::G2);
    CHECK(c.params.omega == 3.0);
    CHECK(c.n_t == 7);
}

TEST_CASE("presets carry the documented parameters", "[cli]") {
    CHECK(preset_names().size() == 32);

    const RunConfig f5a = preset("fig5a");
    CHECK(f5a.params.omega == 9.0);
    CHECK(f5a.params.delta_l == 0.0);
    CHECK(f5a.params.delta_z == -8.0);
    CHECK(std::get<InitialPreset>(f5a.initial) == InitialPreset::EqualGround);

    const RunConfig f2b = preset("fig2b");
    CHECK(f2b.command == Command::Evolve);
    CHECK(f2b.params.omega == 1.0);
    CHECK(f2b.params.delta_l == 2.0);
    CHECK(f2b.params.delta_z == -2.0);
    CHECK(std::get<InitialPreset>(f2b.initial) == InitialPreset::Ground3);

    const RunConfig f13d = preset("fig13d");
    CHECK(f13d.command == Command::Aic);
    CHECK(f13d.params.omega == 9.0);
    CHECK(f13d.params.delta_z == -15.0);
    CHECK_THAT(f13d.phi, WithinAbs(M_PI / 2.0, 1e-15));

    const RunConfig f13h = preset("fig13h");
    CHECK(f13h.command == Command::QSpectrum);
    CHECK(f13h.params.delta_z == -15.0);

    const RunConfig f8a = preset("fig8a");
    CHECK(f8a.command == Command::Sweep);
    CHECK(f8a.sweep_of == Command::G2);
    REQUIRE(f8a.sweep_points.size() == 4);
    CHECK(f8a.sweep_points[1].params.omega == 0.25);
    CHECK(f8a.sweep_points[1].params.delta_l == 2.0);
    CHECK(f8a.sweep_points[1].params.delta_z == -2.0);

    CHECK_THROWS_AS(preset("fig1"), UnknownPreset);
}

TEST_CASE("sweeps are long-format and independent of the worker count", "[cli]") {
    const std::vector<std::string> args = {"sweep", "--of", "g2", "--param", "omega", "--from",
                                           "0.5", "--to", "3", "--steps", "6", "--n-t", "50"};
    ::setenv("RFBEATS_THREADS", "1", 1);
    CHECK(sweep_threads() == 1);
    const auto serial = invoke(args);
    ::setenv("RFBEATS_THREADS", "3", 1);
    CHECK(sweep_threads() == 3);
    const auto parallel = invoke(args);
    ::unsetenv("RFBEATS_THREADS");
    REQUIRE(serial.code == 0);
    CHECK(serial.out == parallel.out);

    const auto lines = data_lines(serial.out);
    REQUIRE(lines.size() == 1 + 6 * 50);
    CHECK(lines[0] == "point,omega,delta_l,delta_z,phi,tau,g2");
    CHECK(parse_row(lines[51])[0] == 1.0);
    CHECK(parse_row(lines[51])[1] == 1.0);

    // Scalar commands give one row per point.
    const auto scalar = invoke({"sweep", "--of", "variance", "--param", "phi", "--from", "0",
                                "--to", "1", "--steps", "3", "--omega", "0.3"});
    REQUIRE(scalar.code == 0);
    CHECK(data_lines(scalar.out).size() == 4);

    // A subcommand applied to a sweep preset changes the evaluated command.
    const auto q = invoke({"qspectrum", "--preset", "fig10", "--n-w", "5", "--w-max", "1",
                           "--dump-config"});
    CHECK_THAT(q.out, ContainsSubstring("\"sweep_of\": \"qspectrum\""));

    CHECK(invoke({"sweep", "--of", "sweep", "--param", "omega", "--from", "0", "--to", "1",
                  "--steps", "2"}).code == kExitConfigError);
    CHECK(invoke({"sweep", "--param", "omega", "--from", "0", "--to", "1"}).code ==
          kExitConfigError);
}

TEST_CASE("every preset runs within its time budget", "[cli][presets]") {
    for (const auto& name : preset_names()) {
        const RunConfig c = preset(name);
        const auto start = std::chrono::steady_clock::now();
        const Report r = run(c);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        INFO(name << " took " << seconds << " s");
        CHECK(seconds < 10.0);
        CHECK((r.has_table() || !r.scalars.empty()));
    }
}
