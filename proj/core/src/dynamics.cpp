#include "rfbeats/dynamics.hpp"

#include <cmath>
#include <string>

#include "rfbeats/errors.hpp"

namespace rfbeats {

std::vector<double> Trajectory::population(Slot s) const {
    std::vector<double> out;
    out.reserve(states.size());
    for (const auto& r : states) out.push_back(r[s].real());
    return out;
}

std::optional<InitialPreset> parse_initial_preset(std::string_view name) {
    if (name == "ground3") return InitialPreset::Ground3;
    if (name == "ground4") return InitialPreset::Ground4;
    if (name == "equal-ground") return InitialPreset::EqualGround;
    if (name == "steady") return InitialPreset::Steady;
    return std::nullopt;
}

const char* initial_preset_name(InitialPreset preset) {
    switch (preset) {
        case InitialPreset::Ground3: return "ground3";
        case InitialPreset::Ground4: return "ground4";
        case InitialPreset::EqualGround: return "equal-ground";
        case InitialPreset::Steady: return "steady";
    }
    return "?";
}

BlochVector initial_state(const System& system, InitialPreset preset) {
    switch (preset) {
        case InitialPreset::Ground3: return BlochVector::from_populations(0, 0, 1, 0);
        case InitialPreset::Ground4: return BlochVector::from_populations(0, 0, 0, 1);
        case InitialPreset::EqualGround: return BlochVector::from_populations(0, 0, 0.5, 0.5);
        case InitialPreset::Steady: return system.steady().alpha;
    }
    throw UnphysicalInitialState("unknown initial preset");
}

std::vector<double> default_time_grid() { return numerics::linspace(0.0, 20.0, 2000); }

Trajectory evolve(const System& system, const BlochVector& r0, std::span<const double> times) {
    if (!r0.is_physical(1e-9)) {
        throw UnphysicalInitialState(
            "initial state must have real populations in [0,1] summing to 1 and conjugate-paired "
            "coherences");
    }
    for (double t : times) {
        if (!(t >= 0.0) || !std::isfinite(t)) {
            throw InvalidParameters("evolution times must be finite and non-negative");
        }
    }
    Trajectory traj;
    traj.times.assign(times.begin(), times.end());
    auto raw = system.propagator().apply(times, r0.values());
    traj.states.reserve(raw.size());
    for (auto& v : raw) traj.states.emplace_back(std::move(v));
    return traj;
}

std::vector<double> intensity_pi(const PhysParams& p, const Trajectory& traj) {
    const double f2 = p.f_pi * p.f_pi;
    std::vector<double> out;
    out.reserve(traj.states.size());
    for (const auto& r : traj.states) out.push_back(f2 * r.pi_population());
    return out;
}

double intensity_pi(const PhysParams& p, const SteadyState& ss) {
    return p.f_pi * p.f_pi * ss.intensity();
}

std::vector<double> intensity_sigma(const PhysParams& p, const Trajectory& traj) {
    const double f2 = p.f_sigma() * p.f_sigma();
    std::vector<double> out;
    out.reserve(traj.states.size());
    for (const auto& r : traj.states) out.push_back(f2 * r.pi_population());
    return out;
}

double intensity_sigma(const PhysParams& p, const SteadyState& ss) {
    return p.f_sigma() * p.f_sigma() * ss.intensity();
}

IntensityDecomposition decompose_intensity(const SteadyState& ss) {
    const cplx a13 = ss.alpha[Slot::A13];
    const cplx a24 = ss.alpha[Slot::A24];
    const cplx a42 = ss.alpha[Slot::A42];

    IntensityDecomposition out;
    out.total = ss.intensity();
    out.coh0 = std::norm(a13) + std::norm(a24);
    out.inc0 = out.total - out.coh0;
    out.coh_cross = -2.0 * (a13 * a42).real();
    out.inc_cross = -out.coh_cross;
    return out;
}

double inc0_printed(const PhysParams& p) {
    const double W = p.omega, g = p.gamma, D = p.delta_l, d = p.delta_z;
    const double den = steady_denominator(p);
    return W * W / (den * den) * (2.0 * W * W - g * g / 4.0 - D * D - d * d);
}

double inc0_closed_form(const PhysParams& p) {
    const double W = p.omega, g = p.gamma, D = p.delta_l, d = p.delta_z;
    const double den = steady_denominator(p);
    return W * W / (den * den) *
           (2.0 * W * W + g * g / 8.0 + D * D / 2.0 - D * d / 2.0 + d * d / 4.0);
}

}  // namespace rfbeats
