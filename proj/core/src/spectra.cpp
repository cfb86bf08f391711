#include "rfbeats/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rfbeats/correlations.hpp"
#include "rfbeats/errors.hpp"

namespace rfbeats {

namespace {

constexpr cplx I{0.0, 1.0};

CVector population_functional() {
    CVector l = CVector::Zero(kBlochDim);
    for (auto i : kPopulationSlots) l(i) = 1.0;
    return l;
}

numerics::DeflatedResolvent deflated(const System& system) {
    return numerics::DeflatedResolvent(system.liouvillian(), system.steady().alpha.values(),
                                       population_functional());
}

/// Removes the stationary-mode component of a fluctuation vector, which is
/// zero up to roundoff by construction.
CVector project_out_zero_mode(const System& system, CVector v, const char* what) {
    const cplx overlap = population_trace(v);
    const double scale = std::max(v.cwiseAbs().maxCoeff(), 1.0);
    if (std::abs(overlap) > 1e-10 * scale) {
        throw ZeroModeProjection(std::string(what) + " overlaps the stationary mode by " +
                                 std::to_string(std::abs(overlap)));
    }
    v -= overlap * system.steady().alpha.values();
    return v;
}

void require_intensity(const System& system) {
    if (!(system.steady().intensity() > 0.0)) {
        throw ZeroIntensity("stationary intensity vanishes (omega = 0)");
    }
}

}  // namespace

const SpectrumChannel& SpectrumResult::channel(std::string_view name) const {
    for (const auto& c : channels) {
        if (c.name == name) return c;
    }
    throw std::out_of_range("no spectrum channel named " + std::string(name));
}

std::vector<double> default_frequency_grid(const PhysParams& p) {
    const double d = p.delta_z - p.delta_l;
    const double omega2 = std::sqrt(4.0 * p.omega * p.omega + d * d);
    const double extent = std::max(30.0 * p.gamma, 1.5 * omega2);
    return numerics::linspace(-extent, extent, 2001);
}

double coherent_weight(const PhysParams& p) {
    const double den = steady_denominator(p);
    const double x = p.delta_l - p.delta_z / 2.0;
    return std::numbers::pi * p.omega * p.omega / (den * den) *
           (p.gamma * p.gamma / 4.0 + x * x);
}

SpectrumResult incoherent_spectrum(const System& system, std::span<const double> omegas) {
    require_intensity(system);
    const MomentRules rules(system.steady());
    const CVector w =
        project_out_zero_mode(system, initial_vectors::field_fluct_left(rules), "<dE- dR>");
    const auto resolvent = deflated(system);

    SpectrumResult out;
    out.omegas.assign(omegas.begin(), omegas.end());
    out.coherent_weight = coherent_weight(system.params());
    SpectrumChannel ch{"S_inc", {}};
    ch.values.reserve(omegas.size());
    for (double omega : omegas) {
        ch.values.push_back(field_plus(resolvent.solve(omega, w)).real());
    }
    out.channels.push_back(std::move(ch));
    return out;
}

SpectrumResult quadrature_spectra(const System& system, double phi,
                                  std::span<const double> omegas) {
    const AicNormalization norm = aic_normalization(system, phi);
    const MomentRules rules(system.steady());
    const cplx rot = std::exp(-I * phi);
    const cplx e_plus = std::conj(norm.mean_field);
    const double prefactor = 8.0 * system.params().gamma1() / norm.h_inf;

    CMatrix rhs(kBlochDim, 2);
    rhs.col(0) = project_out_zero_mode(system, initial_vectors::field_fluct_left(rules),
                                       "<dE- dR>");
    rhs.col(1) = project_out_zero_mode(system, initial_vectors::field_fluct_sandwich(rules),
                                       "<dE- dR dE+>");
    const auto resolvent = deflated(system);

    // Linear functionals giving h2 and h3 from the propagated vectors.
    auto second = [&](const CVector& x) {
        return e_plus * (rot * field_minus(x) + std::conj(rot) * field_plus(x));
    };
    auto third = [&](const CVector& x) { return rot * field_minus(x); };

    SpectrumResult out;
    out.omegas.assign(omegas.begin(), omegas.end());
    out.coherent_weight = coherent_weight(system.params());
    SpectrumChannel s2{"S2", {}}, s3{"S3", {}}, total{"S", {}};
    for (double omega : omegas) {
        const CMatrix pos = resolvent.solve(omega, rhs);
        const CMatrix neg = resolvent.solve(-omega, rhs);
        const double v2 = 0.5 * (second(pos.col(0)) + second(neg.col(0))).real() * prefactor;
        const double v3 = 0.5 * (third(pos.col(1)) + third(neg.col(1))).real() * prefactor;
        s2.values.push_back(v2);
        s3.values.push_back(v3);
        total.values.push_back(v2 + v3);
    }
    out.channels = {std::move(s2), std::move(s3), std::move(total)};
    return out;
}

SpectrumResult quadrature_spectrum(const System& system, double phi, QuadratureOrder order,
                                   std::span<const double> omegas) {
    SpectrumResult all = quadrature_spectra(system, phi, omegas);
    const char* name = order == QuadratureOrder::Second  ? "S2"
                       : order == QuadratureOrder::Third ? "S3"
                                                         : "S";
    SpectrumChannel keep = all.channel(name);
    all.channels = {std::move(keep)};
    return all;
}

SpectrumResult squeezing_spectrum(const System& system, double phi,
                                  std::span<const double> omegas) {
    require_intensity(system);
    const MomentRules rules(system.steady());
    const CVector w =
        project_out_zero_mode(system, initial_vectors::field_fluct_left(rules), "<dE- dR>");
    const auto resolvent = deflated(system);
    const cplx rot2 = std::exp(-2.0 * I * phi);
    const double prefactor = 8.0 * system.params().gamma1();

    SpectrumResult out;
    out.omegas.assign(omegas.begin(), omegas.end());
    out.coherent_weight = coherent_weight(system.params());
    SpectrumChannel ch{"S2", {}};
    ch.values.reserve(omegas.size());
    for (double omega : omegas) {
        const CVector x = resolvent.solve(omega, w);
        ch.values.push_back(prefactor * 0.5 * (rot2 * field_minus(x) + field_plus(x)).real());
    }
    out.channels.push_back(std::move(ch));
    return out;
}

double reconstruction_check(const System& system, std::span<const double> omegas) {
    const auto inc = incoherent_spectrum(system, omegas).channel("S_inc").values;
    const auto s0 = squeezing_spectrum(system, 0.0, omegas).channel("S2").values;
    const auto s90 =
        squeezing_spectrum(system, std::numbers::pi / 2.0, omegas).channel("S2").values;
    const double scale = 1.0 / (8.0 * system.params().gamma1());
    double worst = 0.0;
    for (std::size_t k = 0; k < inc.size(); ++k) {
        worst = std::max(worst, std::abs(inc[k] - scale * (s0[k] + s90[k])));
    }
    return worst;
}

}  // namespace rfbeats
