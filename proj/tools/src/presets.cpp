#include "rfbeats/cli/presets.hpp"

#include <array>
#include <functional>
#include <map>

#include <fmt/format.h>

#include "rfbeats/errors.hpp"
#include "rfbeats/numerics.hpp"

namespace rfbeats::cli {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

struct Detuning {
    double delta_l;
    double delta_z;
};

// Laser detuning / Zeeman splitting pairs of the weak-field population figures.
constexpr std::array<Detuning, 4> kWeakPairs = {{{0, 0}, {2, -2}, {-2, -2}, {-2, -4}}};

// Zeeman splittings of the strong-field beat figures (omega = 9, delta_l = 0).
constexpr std::array<double, 4> kStrongSplittings = {-8, -10, -12, -15};

PhysParams make(double omega, double delta_l, double delta_z) {
    PhysParams p;
    p.omega = omega;
    p.delta_l = delta_l;
    p.delta_z = delta_z;
    return p;
}

RunConfig single(Command c, const PhysParams& p) {
    RunConfig cfg;
    cfg.command = c;
    cfg.params = p;
    return cfg;
}

RunConfig sweep(Command of, std::vector<SweepPoint> points) {
    RunConfig cfg;
    cfg.command = Command::Sweep;
    cfg.sweep_of = of;
    cfg.params = points.front().params;
    cfg.phi = points.front().phi;
    cfg.sweep_points = std::move(points);
    return cfg;
}

std::vector<SweepPoint> weak_pairs(double omega, double phi = kHalfPi) {
    std::vector<SweepPoint> pts;
    for (const auto& d : kWeakPairs) pts.push_back({make(omega, d.delta_l, d.delta_z), phi});
    return pts;
}

std::vector<SweepPoint> omega_scan(double lo, double hi, std::size_t n, double delta_l,
                                   double delta_z, double phi = kHalfPi) {
    std::vector<SweepPoint> pts;
    for (double w : numerics::linspace(lo, hi, n)) pts.push_back({make(w, delta_l, delta_z), phi});
    return pts;
}

RunConfig populations(std::size_t pair) {
    RunConfig c = single(Command::Evolve, make(1, kWeakPairs[pair].delta_l, kWeakPairs[pair].delta_z));
    c.initial = InitialPreset::Ground3;
    return c;
}

RunConfig steady_scan(std::size_t pair) {
    return sweep(Command::Steady,
                 omega_scan(0.0, 10.0, 201, kWeakPairs[pair].delta_l, kWeakPairs[pair].delta_z));
}

RunConfig strong_intensity(double delta_z) {
    RunConfig c = single(Command::Intensity, make(9, 0, delta_z));
    c.initial = InitialPreset::EqualGround;
    c.t_max = 10.0;
    c.n_t = 4000;
    return c;
}

RunConfig weak_g2(double omega) {
    RunConfig c = sweep(Command::G2, weak_pairs(omega));
    c.t_max = 60.0;
    c.n_t = 3000;
    return c;
}

RunConfig strong_g2(double delta_z) {
    RunConfig c = single(Command::G2, make(9, 0, delta_z));
    c.t_max = 10.0;
    c.n_t = 4000;
    return c;
}

RunConfig weak_aic(Component component) {
    std::vector<SweepPoint> pts;
    for (double w : {0.25, 0.5, 1.0}) {
        for (const auto& p : weak_pairs(w)) pts.push_back(p);
    }
    RunConfig c = sweep(Command::Aic, std::move(pts));
    c.component = component;
    c.t_max = 20.0;
    c.n_t = 2000;
    return c;
}

RunConfig strong_aic(double delta_z) {
    RunConfig c = single(Command::Aic, make(9, 0, delta_z));
    c.phi = kHalfPi;
    c.t_max = 5.0;
    c.n_t = 2000;
    return c;
}

RunConfig strong_qspectrum(double delta_z) {
    RunConfig c = single(Command::QSpectrum, make(9, 0, delta_z));
    c.phi = kHalfPi;
    c.w_max = 30.0;
    c.n_w = 3001;
    return c;
}

RunConfig interference_scan() {
    // Omega = Delta = gamma / 4.
    std::vector<SweepPoint> pts;
    for (double d : numerics::linspace(-10.0, 10.0, 401)) pts.push_back({make(0.25, 0.25, d), kHalfPi});
    return sweep(Command::Interference, std::move(pts));
}

RunConfig variance_panels() {
    std::vector<SweepPoint> pts;
    auto append = [&](std::vector<SweepPoint> more) {
        pts.insert(pts.end(), more.begin(), more.end());
    };
    auto detuning_scan = [](double omega, double delta_z, double phi) {
        std::vector<SweepPoint> out;
        for (double D : numerics::linspace(-5.0, 5.0, 201)) out.push_back({make(omega, D, delta_z), phi});
        return out;
    };
    // Out-of-phase quadrature: vs omega at Delta = 0 and -2, vs Delta at omega = 0.2.
    for (double dz : {0.0, -0.5, -2.0}) append(omega_scan(0.0, 3.0, 151, 0.0, dz, kHalfPi));
    for (double dz : {0.0, -0.5, -2.0}) append(omega_scan(0.0, 3.0, 151, -2.0, dz, kHalfPi));
    for (double dz : {0.0, -0.5, -1.0}) append(detuning_scan(0.2, dz, kHalfPi));
    // In-phase quadrature: vs omega at Delta = -2 and 2, vs Delta at omega = 0.8.
    for (double dz : {0.0, -0.5, -2.0}) append(omega_scan(0.0, 3.0, 151, -2.0, dz, 0.0));
    for (double dz : {0.0, -0.5, -2.0}) append(omega_scan(0.0, 3.0, 151, 2.0, dz, 0.0));
    for (double dz : {0.0, -0.5, -1.0}) append(detuning_scan(0.8, dz, 0.0));
    return sweep(Command::Variance, std::move(pts));
}

using Factory = std::function<RunConfig()>;

const std::vector<std::pair<std::string, Factory>>& registry() {
    static const std::vector<std::pair<std::string, Factory>> table = [] {
        std::vector<std::pair<std::string, Factory>> t;
        const char letters[] = "abcdefgh";
        for (std::size_t k = 0; k < 4; ++k) {
            t.emplace_back(fmt::format("fig2{}", letters[k]), [k] { return populations(k); });
        }
        for (std::size_t k = 0; k < 4; ++k) {
            t.emplace_back(fmt::format("fig3{}", letters[k]), [k] { return steady_scan(k); });
        }
        t.emplace_back("fig4", [] {
            RunConfig c = sweep(Command::Intensity, weak_pairs(1.0));
            c.initial = InitialPreset::EqualGround;
            return c;
        });
        t.emplace_back("fig5a", [] { return strong_intensity(-8); });
        t.emplace_back("fig5b", [] { return strong_intensity(-15); });
        t.emplace_back("fig6", interference_scan);
        t.emplace_back("fig7", [] {
            RunConfig c = single(Command::Dipole, make(9, 0, -8));
            c.t_max = 10.0;
            c.n_t = 2000;
            c.w_max = 30.0;
            c.n_w = 3001;
            return c;
        });
        const std::array<double, 3> weak_omegas = {0.25, 0.5, 1.0};
        for (std::size_t k = 0; k < 3; ++k) {
            const double w = weak_omegas[k];
            t.emplace_back(fmt::format("fig8{}", letters[k]), [w] { return weak_g2(w); });
        }
        for (std::size_t k = 0; k < 4; ++k) {
            const double dz = kStrongSplittings[k];
            t.emplace_back(fmt::format("fig9{}", letters[k]), [dz] { return strong_g2(dz); });
        }
        t.emplace_back("fig10", [] { return weak_aic(Component::Total); });
        t.emplace_back("fig11", [] { return weak_aic(Component::Second); });
        t.emplace_back("fig12", [] { return weak_aic(Component::Third); });
        for (std::size_t k = 0; k < 4; ++k) {
            const double dz = kStrongSplittings[k];
            t.emplace_back(fmt::format("fig13{}", letters[k]), [dz] { return strong_aic(dz); });
        }
        for (std::size_t k = 0; k < 4; ++k) {
            const double dz = kStrongSplittings[k];
            t.emplace_back(fmt::format("fig13{}", letters[k + 4]),
                           [dz] { return strong_qspectrum(dz); });
        }
        t.emplace_back("fig14", variance_panels);
        return t;
    }();
    return table;
}

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, factory] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

RunConfig preset(std::string_view name) {
    for (const auto& [n, factory] : registry()) {
        if (n == name) {
            RunConfig c = factory();
            c.preset = n;
            return c;
        }
    }
    throw UnknownPreset(
        fmt::format("unknown preset '{}'; available: {}", name, fmt::join(preset_names(), ", ")));
}

}  // namespace rfbeats::cli
