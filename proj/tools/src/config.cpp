#include "rfbeats/cli/config.hpp"

#include <charconv>
#include <cmath>

#include <fmt/format.h>
#include "json.hpp"

#include "rfbeats/errors.hpp"
#include "rfbeats/numerics.hpp"
#include "rfbeats/spectra.hpp"

namespace rfbeats::cli {

using nlohmann::ordered_json;

namespace {

struct CommandEntry {
    Command command;
    std::string_view name;
    bool scalar;
};

constexpr std::array<CommandEntry, 13> kCommands = {{
    {Command::Steady, "steady", true},
    {Command::Evolve, "evolve", false},
    {Command::Intensity, "intensity", false},
    {Command::G2, "g2", false},
    {Command::Aic, "aic", false},
    {Command::Dipole, "dipole", false},
    {Command::Spectrum, "spectrum", false},
    {Command::QSpectrum, "qspectrum", false},
    {Command::Variance, "variance", true},
    {Command::Interference, "interference", true},
    {Command::Dressed, "dressed", true},
    {Command::Beats, "beats", true},
    {Command::Sweep, "sweep", false},
}};

constexpr std::array<std::pair<Component, std::string_view>, 4> kComponents = {{
    {Component::All, "all"},
    {Component::Total, "total"},
    {Component::Second, "second"},
    {Component::Third, "third"},
}};

double parse_double(std::string_view s, std::string_view what) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError(fmt::format("{}: cannot parse '{}' as a number", what, s));
    }
    return v;
}

ordered_json params_to_json(const PhysParams& p) {
    ordered_json j;
    j["omega"] = p.omega;
    j["delta_l"] = p.delta_l;
    j["delta_z"] = p.delta_z;
    j["gamma"] = p.gamma;
    j["b_pi"] = p.b_pi;
    j["b_sigma"] = p.b_sigma;
    j["f_pi"] = p.f_pi;
    if (p.b_ell) j["b_ell"] = *p.b_ell;
    if (p.g_u) j["g_u"] = *p.g_u;
    if (p.g_ell) j["g_ell"] = *p.g_ell;
    return j;
}

template <class T>
T get_field(const ordered_json& j, std::string_view path) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ConfigError(fmt::format("{}: unexpected type {}", path, j.type_name()));
    }
}

PhysParams params_from_json(const ordered_json& j, std::string_view path) {
    if (!j.is_object()) throw ConfigError(fmt::format("{}: expected an object", path));
    PhysParams p;
    for (const auto& [key, value] : j.items()) {
        const std::string field = fmt::format("{}.{}", path, key);
        const double v = get_field<double>(value, field);
        if (key == "omega") p.omega = v;
        else if (key == "delta_l") p.delta_l = v;
        else if (key == "delta_z") p.delta_z = v;
        else if (key == "gamma") p.gamma = v;
        else if (key == "b_pi") p.b_pi = v;
        else if (key == "b_sigma") p.b_sigma = v;
        else if (key == "f_pi") p.f_pi = v;
        else if (key == "b_ell") p.b_ell = v;
        else if (key == "g_u") p.g_u = v;
        else if (key == "g_ell") p.g_ell = v;
        else throw ConfigError(fmt::format("{}: unknown key", field));
    }
    return p;
}

ordered_json initial_to_json(const InitialSpec& spec) {
    if (const auto* preset = std::get_if<InitialPreset>(&spec)) {
        return initial_preset_name(*preset);
    }
    ordered_json arr = ordered_json::array();
    for (const cplx& z : std::get<ExplicitState>(spec)) arr.push_back({z.real(), z.imag()});
    return arr;
}

InitialSpec initial_from_json(const ordered_json& j) {
    if (j.is_string()) return parse_initial(j.get<std::string>());
    if (!j.is_array() || j.size() != 8) {
        throw ConfigError("initial: expected a preset name or 8 [re, im] pairs");
    }
    ExplicitState s{};
    for (std::size_t k = 0; k < 8; ++k) {
        const auto& e = j[k];
        if (!e.is_array() || e.size() != 2) {
            throw ConfigError(fmt::format("initial[{}]: expected [re, im]", k));
        }
        s[k] = {get_field<double>(e[0], "initial"), get_field<double>(e[1], "initial")};
    }
    return s;
}

Command command_from_json(const ordered_json& j, std::string_view path) {
    const auto name = get_field<std::string>(j, path);
    const auto c = parse_command(name);
    if (!c) throw ConfigError(fmt::format("{}: unknown command '{}'", path, name));
    return *c;
}

}  // namespace

std::string_view command_name(Command c) {
    for (const auto& e : kCommands) {
        if (e.command == c) return e.name;
    }
    return "?";
}

std::optional<Command> parse_command(std::string_view name) {
    for (const auto& e : kCommands) {
        if (e.name == name) return e.command;
    }
    return std::nullopt;
}

const std::vector<Command>& all_commands() {
    static const std::vector<Command> list = [] {
        std::vector<Command> out;
        for (const auto& e : kCommands) out.push_back(e.command);
        return out;
    }();
    return list;
}

bool is_scalar_command(Command c) {
    for (const auto& e : kCommands) {
        if (e.command == c) return e.scalar;
    }
    return false;
}

std::string_view component_name(Component c) {
    for (const auto& [value, name] : kComponents) {
        if (value == c) return name;
    }
    return "?";
}

std::optional<Component> parse_component(std::string_view name) {
    for (const auto& [value, n] : kComponents) {
        if (n == name) return value;
    }
    return std::nullopt;
}

void RunConfig::validate() const {
    auto check_params = [](const PhysParams& p, std::string_view where) {
        try {
            p.validate();
        } catch (const InvalidParameters& e) {
            throw ConfigError(fmt::format("{}: {}", where, e.what()));
        }
    };
    check_params(params, "params");
    if (!std::isfinite(phi)) throw ConfigError("phi: must be finite");
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw ConfigError("t_max: must be positive");
    if (n_t < 2) throw ConfigError("n_t: need at least 2 grid points");
    if (w_max && (!(*w_max > 0.0) || !std::isfinite(*w_max))) {
        throw ConfigError("w_max: must be positive");
    }
    if (n_w < 2) throw ConfigError("n_w: need at least 2 grid points");
    if (!(a33 >= 0.0 && a33 <= 1.0)) throw ConfigError("a33: must lie in [0, 1]");
    if (command == Command::Sweep) {
        if (sweep_of == Command::Sweep) throw ConfigError("sweep_of: cannot nest sweeps");
        if (sweep_points.empty()) throw ConfigError("sweep_points: empty sweep");
        for (std::size_t k = 0; k < sweep_points.size(); ++k) {
            check_params(sweep_points[k].params, fmt::format("sweep_points[{}]", k));
        }
    }
}

OutputFormat RunConfig::effective_format() const {
    if (format) return *format;
    return is_scalar_command(command) ? OutputFormat::Json : OutputFormat::Csv;
}

std::vector<double> RunConfig::time_grid() const { return numerics::linspace(0.0, t_max, n_t); }

std::vector<double> RunConfig::frequency_grid(const PhysParams& p) const {
    if (!w_max) return default_frequency_grid(p);
    return numerics::linspace(-*w_max, *w_max, n_w);
}

std::string dump_config(const RunConfig& c) {
    ordered_json j;
    j["command"] = command_name(c.command);
    j["preset"] = c.preset;
    j["params"] = params_to_json(c.params);
    j["phi"] = c.phi;
    j["t_max"] = c.t_max;
    j["n_t"] = c.n_t;
    j["w_max"] = c.w_max ? ordered_json(*c.w_max) : ordered_json(nullptr);
    j["n_w"] = c.n_w;
    j["initial"] = initial_to_json(c.initial);
    j["a33"] = c.a33;
    j["component"] = component_name(c.component);
    if (c.command == Command::Sweep) {
        j["sweep_of"] = command_name(c.sweep_of);
        ordered_json pts = ordered_json::array();
        for (const auto& pt : c.sweep_points) {
            pts.push_back({{"params", params_to_json(pt.params)}, {"phi", pt.phi}});
        }
        j["sweep_points"] = std::move(pts);
    }
    if (c.format) j["format"] = *c.format == OutputFormat::Csv ? "csv" : "json";
    return j.dump(2) + "\n";
}

RunConfig load_config(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(fmt::format("config: {}", e.what()));
    }
    if (!j.is_object()) throw ConfigError("config: top level must be an object");

    RunConfig c;
    for (const auto& [key, value] : j.items()) {
        if (key == "command") c.command = command_from_json(value, key);
        else if (key == "preset") c.preset = get_field<std::string>(value, key);
        else if (key == "params") c.params = params_from_json(value, key);
        else if (key == "phi") c.phi = get_field<double>(value, key);
        else if (key == "t_max") c.t_max = get_field<double>(value, key);
        else if (key == "n_t") c.n_t = get_field<std::size_t>(value, key);
        else if (key == "w_max") {
            c.w_max = value.is_null() ? std::nullopt
                                      : std::optional<double>(get_field<double>(value, key));
        } else if (key == "n_w") c.n_w = get_field<std::size_t>(value, key);
        else if (key == "initial") c.initial = initial_from_json(value);
        else if (key == "a33") c.a33 = get_field<double>(value, key);
        else if (key == "component") {
            const auto comp = parse_component(get_field<std::string>(value, key));
            if (!comp) throw ConfigError("component: expected all, total, second or third");
            c.component = *comp;
        } else if (key == "sweep_of") c.sweep_of = command_from_json(value, key);
        else if (key == "sweep_points") {
            if (!value.is_array()) throw ConfigError("sweep_points: expected an array");
            for (std::size_t k = 0; k < value.size(); ++k) {
                const auto& e = value[k];
                const std::string path = fmt::format("sweep_points[{}]", k);
                if (!e.is_object() || !e.contains("params")) {
                    throw ConfigError(path + ": expected {params, phi}");
                }
                SweepPoint pt;
                pt.params = params_from_json(e["params"], path + ".params");
                if (e.contains("phi")) pt.phi = get_field<double>(e["phi"], path + ".phi");
                c.sweep_points.push_back(pt);
            }
        } else if (key == "format") {
            const auto f = get_field<std::string>(value, key);
            if (f == "csv") c.format = OutputFormat::Csv;
            else if (f == "json") c.format = OutputFormat::Json;
            else throw ConfigError("format: expected csv or json");
        } else {
            throw ConfigError(fmt::format("{}: unknown key", key));
        }
    }
    c.validate();
    return c;
}

InitialSpec parse_initial(std::string_view text) {
    if (const auto preset = parse_initial_preset(text)) return *preset;
    ExplicitState s{};
    std::size_t count = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string_view item = text.substr(start, comma - start);
        if (count == 8) throw ConfigError("initial: more than 8 entries");
        const std::size_t colon = item.find(':');
        if (colon == std::string_view::npos) {
            s[count] = parse_double(item, "initial");
        } else {
            s[count] = {parse_double(item.substr(0, colon), "initial"),
                        parse_double(item.substr(colon + 1), "initial")};
        }
        ++count;
        start = comma + 1;
    }
    if (count != 8) {
        throw ConfigError(fmt::format(
            "initial: '{}' is neither a preset (ground3, ground4, equal-ground, steady) nor 8 "
            "entries",
            text));
    }
    return s;
}

std::string format_initial(const InitialSpec& spec) {
    if (const auto* preset = std::get_if<InitialPreset>(&spec)) return initial_preset_name(*preset);
    std::string out;
    for (const cplx& z : std::get<ExplicitState>(spec)) {
        if (!out.empty()) out += ',';
        out += fmt::format("{}:{}", z.real(), z.imag());
    }
    return out;
}

}  // namespace rfbeats::cli
