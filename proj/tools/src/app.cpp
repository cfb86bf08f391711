#include "rfbeats/cli/app.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include "CLI11.hpp"

#include "rfbeats/cli/config.hpp"
#include "rfbeats/cli/presets.hpp"
#include "rfbeats/cli/report.hpp"
#include "rfbeats/cli/runner.hpp"
#include "rfbeats/errors.hpp"
#include "rfbeats/numerics.hpp"

namespace rfbeats::cli {

namespace {

// Raw flag values; which ones were given is read back from CLI11.
struct Flags {
    double omega = 0, delta_l = 0, delta_z = 0, gamma = 1, phi = 0;
    double t_max = 0, w_max = 0, a33 = 0.5;
    std::size_t n_t = 0, n_w = 0;
    std::string initial, component, format, output, preset, config;
    bool dump = false;

    std::string sweep_of, sweep_param;
    double sweep_from = 0, sweep_to = 0;
    std::size_t sweep_steps = 0;
};

const std::map<std::string, std::string>& descriptions() {
    static const std::map<std::string, std::string> d = {
        {"run", "run a --preset or --config with its own command"},
        {"steady", "stationary Bloch vector and intensity split"},
        {"evolve", "populations and coherences from an initial state"},
        {"intensity", "pi and sigma fluorescence intensity vs time"},
        {"g2", "normalized photon correlation g2(tau)"},
        {"aic", "amplitude-intensity correlation h(tau) and its components"},
        {"dipole", "dipole fluctuation correlation"},
        {"spectrum", "incoherent power spectrum"},
        {"qspectrum", "quadrature (squeezing and third-order) spectra"},
        {"variance", "normally-ordered quadrature variance and squeezing window"},
        {"interference", "interference measures C and K"},
        {"dressed", "dressed-state energies and Rabi frequencies"},
        {"beats", "beat frequencies from the intensity and g2"},
        {"sweep", "run a command over a parameter range (long-format CSV)"},
    };
    return d;
}

void add_common(CLI::App& sub, Flags& f) {
    sub.add_option("--omega", f.omega, "Rabi frequency (units of gamma)");
    sub.add_option("--delta-l", f.delta_l, "laser detuning");
    sub.add_option("--delta-z", f.delta_z, "difference Zeeman splitting");
    sub.add_option("--gamma", f.gamma, "total decay rate");
    sub.add_option("--phi", f.phi, "quadrature phase (radians)");
    sub.add_option("--t-max", f.t_max, "end of the time / delay grid");
    sub.add_option("--n-t", f.n_t, "time grid points");
    sub.add_option("--w-max", f.w_max, "half-width of the frequency grid");
    sub.add_option("--n-w", f.n_w, "frequency grid points");
    sub.add_option("--initial", f.initial,
                   "ground3, ground4, equal-ground, steady, or 8 entries re[:im]");
    sub.add_option("--a33", f.a33, "beats: initial |3> population of the unitary model");
    sub.add_option("--component", f.component, "all, total, second or third");
    sub.add_option("-o,--output", f.output, "output file (default stdout)");
    sub.add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub.add_option("--preset", f.preset, "named figure configuration");
    sub.add_option("--config", f.config, "JSON configuration file");
    sub.add_flag("--dump-config", f.dump, "print the resolved configuration as JSON and exit");
}

void add_sweep(CLI::App& sub, Flags& f) {
    sub.add_option("--of", f.sweep_of, "command evaluated at each point");
    sub.add_option("--param", f.sweep_param, "swept field: omega, delta-l, delta-z or phi")
        ->check(CLI::IsMember({"omega", "delta-l", "delta-z", "phi"}));
    sub.add_option("--from", f.sweep_from, "first value");
    sub.add_option("--to", f.sweep_to, "last value");
    sub.add_option("--steps", f.sweep_steps, "number of points (>= 2)");
}

bool given(const CLI::App& sub, const std::string& name) {
    return sub.get_option(name)->count() > 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(fmt::format("config: cannot open '{}'", path));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void apply_param_overrides(const CLI::App& sub, const Flags& f, PhysParams& p) {
    if (given(sub, "--omega")) p.omega = f.omega;
    if (given(sub, "--delta-l")) p.delta_l = f.delta_l;
    if (given(sub, "--delta-z")) p.delta_z = f.delta_z;
    if (given(sub, "--gamma")) p.gamma = f.gamma;
}

RunConfig build_config(const CLI::App& sub, const Flags& f) {
    const std::string name = sub.get_name();
    const bool from_file = given(sub, "--config");
    const bool from_preset = given(sub, "--preset");
    if (from_file && from_preset) throw ConfigError("--config and --preset are exclusive");

    RunConfig c;
    if (from_file) c = load_config(read_file(f.config));
    else if (from_preset) c = preset(f.preset);
    else if (name == "run") throw ConfigError("run: needs --preset or --config");

    if (name == "sweep") {
        c.command = Command::Sweep;
    } else if (name != "run") {
        const Command requested = *parse_command(name);
        if (c.command == Command::Sweep && (from_file || from_preset)) c.sweep_of = requested;
        else c.command = requested;
    }

    apply_param_overrides(sub, f, c.params);
    for (auto& pt : c.sweep_points) apply_param_overrides(sub, f, pt.params);
    if (given(sub, "--phi")) {
        c.phi = f.phi;
        for (auto& pt : c.sweep_points) pt.phi = f.phi;
    }
    if (given(sub, "--t-max")) c.t_max = f.t_max;
    if (given(sub, "--n-t")) c.n_t = f.n_t;
    if (given(sub, "--w-max")) c.w_max = f.w_max;
    if (given(sub, "--n-w")) c.n_w = f.n_w;
    if (given(sub, "--initial")) c.initial = parse_initial(f.initial);
    if (given(sub, "--a33")) c.a33 = f.a33;
    if (given(sub, "--component")) {
        const auto comp = parse_component(f.component);
        if (!comp) throw ConfigError("--component: expected all, total, second or third");
        c.component = *comp;
    }
    if (given(sub, "--format")) c.format = f.format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    c.output = f.output;

    if (name == "sweep") {
        if (given(sub, "--of")) {
            const auto of = parse_command(f.sweep_of);
            if (!of) throw ConfigError(fmt::format("--of: unknown command '{}'", f.sweep_of));
            c.sweep_of = *of;
        }
        if (given(sub, "--param")) {
            if (!given(sub, "--from") || !given(sub, "--to") || !given(sub, "--steps")) {
                throw ConfigError("--param needs --from, --to and --steps");
            }
            if (f.sweep_steps < 2) throw ConfigError("--steps: need at least 2 points");
            c.sweep_points.clear();
            for (double v : numerics::linspace(f.sweep_from, f.sweep_to, f.sweep_steps)) {
                SweepPoint pt{c.params, c.phi};
                if (f.sweep_param == "omega") pt.params.omega = v;
                else if (f.sweep_param == "delta-l") pt.params.delta_l = v;
                else if (f.sweep_param == "delta-z") pt.params.delta_z = v;
                else pt.phi = v;
                c.sweep_points.push_back(pt);
            }
        }
    }
    c.validate();
    return c;
}

int execute(const RunConfig& c, bool dump, std::ostream& out) {
    std::ostringstream buffer;
    if (dump) {
        buffer << dump_config(c);
    } else {
        const Report report = run(c);
        if (c.effective_format() == OutputFormat::Csv) write_csv(buffer, c, report);
        else write_json(buffer, c, report);
    }
    if (c.output.empty()) {
        out << buffer.str();
        out.flush();
        return kExitOk;
    }
    std::ofstream file(c.output, std::ios::binary);
    if (!file) throw ConfigError(fmt::format("output: cannot open '{}'", c.output));
    file << buffer.str();
    return kExitOk;
}

}  // namespace

int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum-beat resonance fluorescence of a J=1/2 to J=1/2 atom"};
    app.name("rfbeats");
    app.require_subcommand(1);
    app.set_version_flag("--version", "rfbeats 0.1.0");
    app.footer(fmt::format("Presets: {}\nEnvironment: RFBEATS_THREADS caps sweep workers.",
                           fmt::join(preset_names(), " ")));

    Flags flags;
    std::vector<CLI::App*> subs;
    for (const auto& [name, text] : descriptions()) {
        CLI::App* sub = app.add_subcommand(name, text);
        add_common(*sub, flags);
        if (name == "sweep") add_sweep(*sub, flags);
        subs.push_back(sub);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? e.what() : app.help()) << '\n';
            return kExitOk;
        }
        err << "error: ConfigError: " << e.what() << '\n';
        return kExitConfigError;
    }

    try {
        for (CLI::App* sub : subs) {
            if (sub->parsed()) {
                if (given(*sub, "--help")) {
                    out << sub->help();
                    return kExitOk;
                }
                const RunConfig config = build_config(*sub, flags);
                return execute(config, flags.dump, out);
            }
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        return kExitConfigError;
    } catch (const UnknownPreset& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        return kExitConfigError;
    } catch (const InvalidParameters& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        return kExitConfigError;
    } catch (const Error& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        return kExitPhysicsError;
    }
    return kExitConfigError;
}

}  // namespace rfbeats::cli
