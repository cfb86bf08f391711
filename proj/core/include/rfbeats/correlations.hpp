#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rfbeats/model.hpp"

namespace rfbeats {

/// Products of the operators A_jk (j, k = 1..4) in the stationary state,
/// reduced with A_kl A_mn = delta_lm A_kn. Indices are 1-based.
class MomentRules {
public:
    explicit MomentRules(const SteadyState& ss);

    cplx mean(int j, int k) const;
    /// <A_kl A_mn>
    cplx pair(int k, int l, int m, int n) const;
    /// <A_ij A_kl A_mn>
    cplx triple(int i, int j, int k, int l, int m, int n) const;
    /// <dA_kl dA_mn> with dA = A - <A>
    cplx fluct_pair(int k, int l, int m, int n) const;
    /// <dA_ij dA_kl dA_mn>
    cplx fluct_triple(int i, int j, int k, int l, int m, int n) const;

private:
    std::array<std::array<cplx, 4>, 4> alpha_{};
};

/// Initial conditions for the regression formula, one entry per Bloch slot.
/// `left(i,j)` is <A_ij R>, `sandwich(i,j,m,n)` is <A_ij R A_mn>, and the
/// fluct_ variants use fluctuation operators throughout.
namespace initial_vectors {
CVector left(const MomentRules& rules, int i, int j);
CVector sandwich(const MomentRules& rules, int i, int j, int m, int n);
CVector fluct_left(const MomentRules& rules, int i, int j);
CVector fluct_sandwich(const MomentRules& rules, int i, int j, int m, int n);

/// <E- R E+> with E- ~ A13 - A24 and E+ ~ A31 - A42.
CVector field_sandwich(const MomentRules& rules);
/// <dE- dR>
CVector field_fluct_left(const MomentRules& rules);
/// <dE- dR dE+>
CVector field_fluct_sandwich(const MomentRules& rules);
}  // namespace initial_vectors

/// Negative- and positive-frequency field components of a Bloch-ordered
/// vector: x[A13] - x[A24] and x[A31] - x[A42].
cplx field_minus(const CVector& x);
cplx field_plus(const CVector& x);

/// Sum of the population slots; the overlap with the stationary mode.
cplx population_trace(const CVector& x);

struct Channel {
    std::string name;
    std::vector<cplx> values;

    std::vector<double> real() const;
    std::vector<double> imag() const;
};

struct NamedVector {
    std::string name;
    CVector values;
};

struct CorrelationSeries {
    std::vector<double> taus;
    std::vector<Channel> channels;
    double normalization = 1.0;
    std::vector<NamedVector> initial_conditions;

    /// Throws std::out_of_range for unknown names.
    const Channel& channel(std::string_view name) const;
};

/// e^{M tau} w0 on the grid.
std::vector<CVector> qrf_correlate(const System& system, const CVector& w0,
                                   std::span<const double> taus);

/// Normalized photon-photon correlation; channel "g2". Throws ZeroIntensity
/// when the stationary intensity vanishes.
CorrelationSeries g2(const System& system, std::span<const double> taus);

/// Dipole fluctuation correlation. Channel "total" is
/// d13_31 + d24_42 - d13_42 - d24_31, where dij_mn = <dA_ij(0) dA_mn(tau)>;
/// the four terms are returned as separate channels.
CorrelationSeries dipole_fluctuation_correlation(const System& system,
                                                 std::span<const double> taus);

/// Mean field amplitude, stationary intensity and the normalization of the
/// amplitude-intensity correlation for quadrature phase `phi`.
struct AicNormalization {
    cplx mean_field;       // <E->
    double mean_quadrature;  // Re(<E-> e^{-i phi})
    double intensity;
    double h_inf;            // intensity * mean_quadrature
};

/// Throws ZeroIntensity or VanishingMeanQuadrature.
AicNormalization aic_normalization(const System& system, double phi);

/// Amplitude-intensity correlation with channels "h", "h2" and "h3". The
/// three are built from independent initial vectors; h = 1 + h2 + h3 is a
/// consistency property, not a construction.
CorrelationSeries aic(const System& system, double phi, std::span<const double> taus);

/// h2(0) and h3(0) in closed form.
double aic_h2_initial(const PhysParams& p);
double aic_h3_initial(const PhysParams& p);

}  // namespace rfbeats
