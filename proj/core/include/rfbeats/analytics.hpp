#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rfbeats/model.hpp"

namespace rfbeats {

/// Dressed-state energies and generalized Rabi frequencies of the two pi
/// transitions (1-3 and 2-4).
struct DressedData {
    double E1_plus = 0.0;
    double E1_minus = 0.0;
    double E2_plus = 0.0;
    double E2_minus = 0.0;
    double Omega1 = 0.0;
    double Omega2 = 0.0;
    double Omega_av = 0.0;
    double Omega_beat = 0.0;
    double Theta1 = 0.0;  // mixing angles in [0, pi/2]
    double Theta2 = 0.0;

    /// sin^2(2 Theta_i) = 4 Omega^2 / Omega_i^2, the Rabi-oscillation depth.
    double depth1() const;
    double depth2() const;
};

/// The ground splitting b_ell (0 when unset) only shifts E2.
DressedData dressed(const PhysParams& p);

struct SpecialPoints {
    double delta0 = 0.0;       // C = 0
    double delta_min = 0.0;    // C minimal
    double c_min = 0.0;
    double delta_half_plus = 0.0;  // C = 1/2
    double delta_half_minus = 0.0;
};

struct InterferenceReport {
    double C = 0.0;
    double K_alpha = 0.0;
    /// Closed form as usually printed; unset when its denominator vanishes.
    std::optional<double> K_printed;
    /// Only for |Delta| > 1e-9 gamma.
    std::optional<SpecialPoints> special_points;
};

/// Relative weight of the cross term in the coherent intensity.
double interference_c(const PhysParams& p);

/// Throws DivisionByZero when the incoherent intensity vanishes (omega = 0).
InterferenceReport interference_measures(const PhysParams& p);

struct OmegaWindow {
    double lo = 0.0;
    double hi = 0.0;
};

/// Normally-ordered variance of quadrature phi, including f_pi^2.
///
/// `optimal_omega` is found by bounded Brent minimization over the squeezing
/// window; `optimal_omega_closed` is the exact stationary point of the
/// closed-form variance. The `_printed` fields evaluate the specialized
/// formulas commonly quoted for phi = pi/2 and phi = 0 (delta = 0); they are
/// reported for comparison and are not always consistent with the exact ones.
struct VarianceReport {
    double phi = 0.0;
    double V = 0.0;
    bool squeezed = false;

    std::optional<OmegaWindow> window;
    std::optional<double> optimal_omega;
    std::optional<double> optimal_omega_closed;
    std::optional<double> optimal_variance;

    std::optional<OmegaWindow> window_printed;
    std::optional<double> optimal_omega_printed;
    std::optional<double> optimal_variance_printed;
};

/// Closed-form variance (Omega^2 / 2D) [1 - c^2 / 2D] f_pi^2 with
/// c = (2 Delta - delta) cos phi + gamma sin phi.
double variance_value(const PhysParams& p, double phi);

/// Same quantity from the stationary moments:
/// (f_pi^2 / 2) Re[-(a13 - a24)^2 e^{-2 i phi} + a11 + a22 - |a13 - a24|^2].
double variance_from_moments(const PhysParams& p, const SteadyState& ss, double phi);

/// Variance from the integral of the unnormalized squeezing spectrum,
/// int S2 domega / (8 pi gamma1 eta), with unit detector efficiency. The
/// integral runs over the whole real line through omega = scale * tan(theta).
double variance_from_spectrum(const System& system, double phi, std::size_t n_points = 20001);

VarianceReport variance(const PhysParams& p, double phi);

struct UnitaryBeatResult {
    std::vector<double> times;
    std::vector<double> intensity;  // I_pi / f_pi^2
    /// Ground-population ratio a33/a44 that gives fully modulated beats;
    /// unset when Omega = 0.
    std::optional<double> optimal_ratio;
    /// True when the supplied populations satisfy the optimal ratio to 1e-9,
    /// in which case intensity = amplitude * [1 - cos(Ob t) cos(Oav t)].
    bool factorized = false;
    double amplitude = 0.0;
};

/// Excited-state intensity of the undamped model started from ground
/// populations a33_0, a44_0. Throws InvalidPopulations unless both are
/// non-negative and sum to 1.
UnitaryBeatResult unitary_beat_model(const PhysParams& p, double a33_0, double a44_0,
                                     std::span<const double> times);

}  // namespace rfbeats
