#include "rfbeats/analytics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/tools/minima.hpp>

#include "rfbeats/dynamics.hpp"
#include "rfbeats/errors.hpp"
#include "rfbeats/spectra.hpp"

namespace rfbeats {

namespace {

constexpr cplx I{0.0, 1.0};

double sq(double x) { return x * x; }

bool near(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

// D without the drive term.
double detuning_part(const PhysParams& p) {
    return sq(p.gamma) / 4.0 + sq(p.delta_z) / 4.0 + sq(p.delta_l - p.delta_z / 2.0);
}

double quadrature_weight(const PhysParams& p, double phi) {
    return (2.0 * p.delta_l - p.delta_z) * std::cos(phi) + p.gamma * std::sin(phi);
}

void fill_printed(const PhysParams& p, double phi, VarianceReport& r) {
    const double g = p.gamma, D = p.delta_l, d = p.delta_z;
    const double f2 = sq(p.f_pi);
    if (near(phi, std::numbers::pi / 2.0)) {
        const double arg = sq(g) / 2.0 - sq(d) / 2.0 - 2.0 * sq(D - d / 2.0);
        if (arg > 0.0) r.window_printed = OmegaWindow{0.0, 0.5 * std::sqrt(arg)};
        const double s = sq(d - D) + sq(D);
        const double num = std::pow(g, 4) / 2.0 - 2.0 * sq(s);
        const double den = 3.0 * sq(g) + 2.0 * sq(s);
        if (num > 0.0) r.optimal_omega_printed = 0.5 * std::sqrt(num / den);
        if (D == 0.0 && std::abs(d) < g / std::sqrt(2.0)) {
            r.optimal_variance_printed =
                f2 / 16.0 * (std::pow(g, 4) / 2.0 - 2.0 * std::pow(d, 4)) * (sq(d) - sq(g)) /
                (sq(g) * (sq(g) + 2.0 * sq(d)) * (sq(d) + sq(g)));
        } else if (d == 0.0 && std::abs(D) < g / std::sqrt(2.0)) {
            r.optimal_variance_printed =
                f2 / 16.0 * (std::pow(g, 4) / 2.0 - 8.0 * std::pow(D, 4)) * (4.0 * sq(D) - sq(g)) /
                (sq(g) * sq(sq(g) + 4.0 * sq(D)));
        }
    } else if (near(phi, 0.0) && d == 0.0) {
        if (std::abs(D) > g / 2.0) {
            r.window_printed = OmegaWindow{0.0, std::sqrt(sq(D) - sq(g) / 4.0) / std::sqrt(2.0)};
            r.optimal_omega_printed = 1.0 / (2.0 * std::sqrt(2.0)) *
                                      std::sqrt((16.0 * sq(D) - sq(g)) / (12.0 * sq(D) + sq(g)));
        }
        if (std::abs(D) >= g / 2.0) {
            r.optimal_variance_printed =
                -f2 / 128.0 * (4.0 * sq(D) - sq(g)) / (sq(D) * (4.0 * sq(D) + sq(g)));
        }
    }
}

}  // namespace

double DressedData::depth1() const {
    return Omega1 > 0.0 ? sq(std::sin(2.0 * Theta1)) : 0.0;
}

double DressedData::depth2() const {
    return Omega2 > 0.0 ? sq(std::sin(2.0 * Theta2)) : 0.0;
}

DressedData dressed(const PhysParams& p) {
    p.validate();
    const double W = p.omega, D = p.delta_l, Dd = p.delta_z - p.delta_l;
    const double shift = p.b_ell.value_or(0.0);

    DressedData out;
    out.Omega1 = std::sqrt(4.0 * W * W + D * D);
    out.Omega2 = std::sqrt(4.0 * W * W + Dd * Dd);
    out.E1_plus = -D / 2.0 + out.Omega1 / 2.0;
    out.E1_minus = -D / 2.0 - out.Omega1 / 2.0;
    out.E2_plus = shift + Dd / 2.0 + out.Omega2 / 2.0;
    out.E2_minus = shift + Dd / 2.0 - out.Omega2 / 2.0;
    out.Omega_av = 0.5 * (out.Omega2 + out.Omega1);
    out.Omega_beat = 0.5 * (out.Omega2 - out.Omega1);
    out.Theta1 = std::atan2(2.0 * W, D + out.Omega1);
    out.Theta2 = std::atan2(2.0 * W, Dd + out.Omega2);
    return out;
}

double interference_c(const PhysParams& p) {
    const double g = p.gamma, D = p.delta_l, d = p.delta_z;
    return (sq(g) / 4.0 + D * (D - d)) / detuning_part(p);
}

InterferenceReport interference_measures(const PhysParams& p) {
    p.validate();
    const double g = p.gamma, D = p.delta_l, d = p.delta_z, W = p.omega;

    InterferenceReport r;
    r.C = interference_c(p);

    const IntensityDecomposition parts = decompose_intensity(steady_state(p));
    if (parts.inc0 == 0.0) {
        throw DivisionByZero("incoherent intensity vanishes; K is undefined at omega = 0");
    }
    r.K_alpha = parts.inc_cross / parts.inc0;

    const double k_den = 2.0 * (sq(g) / 4.0 + sq(d) + sq(D) - 2.0 * sq(W));
    if (k_den != 0.0) r.K_printed = (sq(g) / 4.0 + D * (D - d)) / k_den;

    if (std::abs(D) > 1e-9 * g) {
        SpecialPoints s;
        const double q = 1.0 + sq(g / (2.0 * D));
        s.delta0 = D * q;
        s.delta_min = 2.0 * D * q;
        s.c_min = -1.0 / (1.0 + sq(g) / (2.0 * sq(D)));
        const double root = std::sqrt(3.0 * sq(D) + sq(g) / 2.0);
        s.delta_half_plus = -D + root;
        s.delta_half_minus = -D - root;
        r.special_points = s;
    }
    return r;
}

double variance_value(const PhysParams& p, double phi) {
    const double W = p.omega;
    const double den = steady_denominator(p);
    const double c = quadrature_weight(p, phi);
    return sq(p.f_pi) * W * W / (2.0 * den) * (1.0 - c * c / (2.0 * den));
}

double variance_from_moments(const PhysParams& p, const SteadyState& ss, double phi) {
    const cplx em = ss.mean_field();
    const cplx inner = -em * em * std::exp(-2.0 * I * phi) + ss.intensity() - std::norm(em);
    return sq(p.f_pi) / 2.0 * inner.real();
}

double variance_from_spectrum(const System& system, double phi, std::size_t n_points) {
    if (n_points < 2) throw DimensionMismatch("variance_from_spectrum: need at least 2 points");
    const PhysParams& p = system.params();
    const DressedData dd = dressed(p);
    const double scale = std::max({p.gamma, dd.Omega1, dd.Omega2});

    const double h = std::numbers::pi / static_cast<double>(n_points);
    std::vector<double> omegas(n_points), weights(n_points);
    for (std::size_t k = 0; k < n_points; ++k) {
        const double theta = -std::numbers::pi / 2.0 + (static_cast<double>(k) + 0.5) * h;
        const double c = std::cos(theta);
        omegas[k] = scale * std::tan(theta);
        weights[k] = scale * h / (c * c);
    }
    const auto s2 = squeezing_spectrum(system, phi, omegas).channel("S2").values;
    double integral = 0.0;
    for (std::size_t k = 0; k < n_points; ++k) integral += weights[k] * s2[k];
    constexpr double eta = 1.0;
    return sq(p.f_pi) * integral / (8.0 * std::numbers::pi * p.gamma1() * eta);
}

VarianceReport variance(const PhysParams& p, double phi) {
    p.validate();
    VarianceReport r;
    r.phi = phi;
    r.V = variance_value(p, phi);
    r.squeezed = r.V < 0.0;

    const double c = quadrature_weight(p, phi);
    const double e = detuning_part(p);
    if (c * c > 2.0 * e) {
        const double hi = 0.5 * std::sqrt(c * c - 2.0 * e);
        r.window = OmegaWindow{0.0, hi};
        r.optimal_omega_closed = std::sqrt(e * (c * c - 2.0 * e) / (4.0 * e + 2.0 * c * c));

        PhysParams probe = p;
        auto objective = [&](double omega) {
            probe.omega = omega;
            return variance_value(probe, phi);
        };
        const auto [omega_min, v_min] = boost::math::tools::brent_find_minima(
            objective, 0.0, hi, std::numeric_limits<double>::digits / 2);
        r.optimal_omega = omega_min;
        r.optimal_variance = v_min;
    }
    fill_printed(p, phi, r);
    return r;
}

UnitaryBeatResult unitary_beat_model(const PhysParams& p, double a33_0, double a44_0,
                                     std::span<const double> times) {
    if (!(a33_0 >= 0.0) || !(a44_0 >= 0.0) || std::abs(a33_0 + a44_0 - 1.0) > 1e-12) {
        throw InvalidPopulations("initial ground populations must be non-negative and sum to 1");
    }
    const DressedData dd = dressed(p);
    const double s1 = dd.depth1();
    const double s2 = dd.depth2();

    UnitaryBeatResult out;
    out.times.assign(times.begin(), times.end());
    out.intensity.reserve(times.size());
    for (double t : times) {
        out.intensity.push_back(0.5 * (a33_0 * s1 * (1.0 - std::cos(dd.Omega1 * t)) +
                                       a44_0 * s2 * (1.0 - std::cos(dd.Omega2 * t))));
    }
    if (s1 > 0.0) out.optimal_ratio = s2 / s1;
    out.factorized = std::abs(a33_0 * s1 - a44_0 * s2) <= 1e-9;
    if (out.factorized) out.amplitude = a33_0 * s1;
    return out;
}

}  // namespace rfbeats
