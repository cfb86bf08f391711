#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rfbeats/model.hpp"

namespace rfbeats {

struct SpectrumChannel {
    std::string name;
    std::vector<double> values;
};

/// Real spectral densities on a frequency grid. The elastic delta(omega)
/// component is never placed on the grid; its weight is a separate scalar.
struct SpectrumResult {
    std::vector<double> omegas;
    std::vector<SpectrumChannel> channels;
    double coherent_weight = 0.0;

    /// Throws std::out_of_range for unknown names.
    const SpectrumChannel& channel(std::string_view name) const;
};

/// 2001 symmetric points spanning +-max(30, 1.5 * Omega2).
std::vector<double> default_frequency_grid(const PhysParams& p);

/// Weight of the elastic delta(omega) line.
double coherent_weight(const PhysParams& p);

/// Incoherent power spectrum, channel "S_inc", from the resolvent on the
/// decaying modes. Throws ZeroIntensity, or ZeroModeProjection when the
/// fluctuation vector overlaps the stationary mode beyond 1e-10.
SpectrumResult incoherent_spectrum(const System& system, std::span<const double> omegas);

enum class QuadratureOrder { Second, Third, Total };

/// Spectra of the normalized amplitude-intensity correlation,
/// 8 gamma1 * int_0^inf cos(omega tau) [h_q(tau) - h_q(inf)] dtau.
/// Channels "S2", "S3" and "S" (= S2 + S3). Throws VanishingMeanQuadrature.
SpectrumResult quadrature_spectra(const System& system, double phi,
                                  std::span<const double> omegas);

/// Single channel of quadrature_spectra(), named as there.
SpectrumResult quadrature_spectrum(const System& system, double phi, QuadratureOrder order,
                                   std::span<const double> omegas);

/// Unnormalized squeezing spectrum of quadrature phi, channel "S2",
/// 8 gamma1 Re int_0^inf e^{-i omega tau} e^{-i phi} <dE-(0) dE_phi(tau)> dtau.
/// Defined for every phi including phases where the mean quadrature vanishes.
SpectrumResult squeezing_spectrum(const System& system, double phi,
                                  std::span<const double> omegas);

/// max_omega |S_inc - (S2_0 + S2_{pi/2}) / (8 gamma1)| on the grid.
double reconstruction_check(const System& system, std::span<const double> omegas);

}  // namespace rfbeats
