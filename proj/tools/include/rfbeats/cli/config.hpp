#pragma once

#include <array>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rfbeats/dynamics.hpp"
#include "rfbeats/model.hpp"

namespace rfbeats::cli {

enum class Command {
    Steady,
    Evolve,
    Intensity,
    G2,
    Aic,
    Dipole,
    Spectrum,
    QSpectrum,
    Variance,
    Interference,
    Dressed,
    Beats,
    Sweep,
};

std::string_view command_name(Command c);
std::optional<Command> parse_command(std::string_view name);
const std::vector<Command>& all_commands();

/// Commands whose natural output is a handful of scalars rather than a series.
bool is_scalar_command(Command c);

enum class OutputFormat { Csv, Json };

/// Which AIC / quadrature-spectrum channels to emit.
enum class Component { All, Total, Second, Third };

std::string_view component_name(Component c);
std::optional<Component> parse_component(std::string_view name);

using ExplicitState = std::array<cplx, 8>;
using InitialSpec = std::variant<InitialPreset, ExplicitState>;

struct SweepPoint {
    PhysParams params;
    double phi = std::numbers::pi / 2.0;
};

struct RunConfig {
    Command command = Command::Steady;
    std::string preset;  // informational; echoed in the output header

    PhysParams params;
    double phi = std::numbers::pi / 2.0;

    double t_max = 20.0;
    std::size_t n_t = 2000;
    std::optional<double> w_max;  // unset: default_frequency_grid()
    std::size_t n_w = 2001;

    InitialSpec initial = InitialPreset::Ground3;
    double a33 = 0.5;  // beats: ground population for the unitary model
    Component component = Component::All;

    Command sweep_of = Command::Steady;
    std::vector<SweepPoint> sweep_points;

    std::optional<OutputFormat> format;
    std::string output;  // empty: stdout

    /// Throws ConfigError naming the offending field.
    void validate() const;

    OutputFormat effective_format() const;
    std::vector<double> time_grid() const;
    std::vector<double> frequency_grid(const PhysParams& p) const;
};

/// JSON round trip. Unknown keys are rejected; missing keys keep defaults.
std::string dump_config(const RunConfig& config);
RunConfig load_config(std::string_view json_text);

/// "ground3" etc., or eight comma-separated entries `re` or `re:im`.
InitialSpec parse_initial(std::string_view text);
std::string format_initial(const InitialSpec& spec);

}  // namespace rfbeats::cli
