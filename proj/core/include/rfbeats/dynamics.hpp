#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rfbeats/model.hpp"

namespace rfbeats {

struct Trajectory {
    std::vector<double> times;
    std::vector<BlochVector> states;

    std::vector<double> population(Slot s) const;
};

enum class InitialPreset { Ground3, Ground4, EqualGround, Steady };

/// Accepts "ground3", "ground4", "equal-ground" and "steady".
std::optional<InitialPreset> parse_initial_preset(std::string_view name);
const char* initial_preset_name(InitialPreset preset);

BlochVector initial_state(const System& system, InitialPreset preset);

/// 2000 points on [0, 20].
std::vector<double> default_time_grid();

/// states[k] = e^{M t_k} r0. Throws UnphysicalInitialState unless r0 is a
/// physical single-time state.
Trajectory evolve(const System& system, const BlochVector& r0, std::span<const double> times);

/// f_pi^2 (A11 + A22) along a trajectory.
std::vector<double> intensity_pi(const PhysParams& p, const Trajectory& traj);
/// Stationary pi intensity, f_pi^2 Omega^2 / D.
double intensity_pi(const PhysParams& p, const SteadyState& ss);

/// f_sigma^2 (A11 + A22) along a trajectory; twice the pi intensity.
std::vector<double> intensity_sigma(const PhysParams& p, const Trajectory& traj);
double intensity_sigma(const PhysParams& p, const SteadyState& ss);

/// Stationary pi intensity split into mean-dipole (coherent) and fluctuation
/// (incoherent) parts, each with a single-transition and a cross-transition
/// piece. Units of f_pi^2.
struct IntensityDecomposition {
    double coh0 = 0.0;
    double inc0 = 0.0;
    double coh_cross = 0.0;
    double inc_cross = 0.0;
    double total = 0.0;
};

IntensityDecomposition decompose_intensity(const SteadyState& ss);

/// Closed-form single-transition incoherent intensity as it appears in the
/// literature this model is usually quoted from. It does not agree with the
/// alpha-based value and exists for comparison only.
double inc0_printed(const PhysParams& p);

/// Closed form that does agree with decompose_intensity().inc0.
double inc0_closed_form(const PhysParams& p);

}  // namespace rfbeats
