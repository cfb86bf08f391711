#include "rfbeats/cli/runner.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <limits>
#include <string_view>
#include <thread>

#include "rfbeats/analytics.hpp"
#include "rfbeats/correlations.hpp"
#include "rfbeats/dynamics.hpp"
#include "rfbeats/errors.hpp"
#include "rfbeats/signal.hpp"
#include "rfbeats/spectra.hpp"

namespace rfbeats::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Value opt(const std::optional<double>& v) { return v ? Value(*v) : Value(); }

BlochVector initial_vector(const System& sys, const InitialSpec& spec) {
    if (const auto* preset = std::get_if<InitialPreset>(&spec)) return initial_state(sys, *preset);
    const auto& entries = std::get<ExplicitState>(spec);
    CVector v(8);
    for (int k = 0; k < 8; ++k) v(k) = entries[static_cast<std::size_t>(k)];
    return BlochVector(v);
}

std::vector<double> real_part(const std::vector<cplx>& z) {
    std::vector<double> out(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) out[k] = z[k].real();
    return out;
}

std::vector<double> imag_part(const std::vector<cplx>& z) {
    std::vector<double> out(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) out[k] = z[k].imag();
    return out;
}

bool wants(Component selected, Component c) {
    return selected == Component::All || selected == c;
}

Report steady_report(const PhysParams& p) {
    const SteadyState ss = steady_state(p);
    const IntensityDecomposition parts = decompose_intensity(ss);
    Report r;
    r.add("alpha11", ss.alpha[Slot::A11].real());
    r.add("alpha22", ss.alpha[Slot::A22].real());
    r.add("alpha33", ss.alpha[Slot::A33].real());
    r.add("alpha44", ss.alpha[Slot::A44].real());
    r.add("alpha13_re", ss.alpha[Slot::A13].real());
    r.add("alpha13_im", ss.alpha[Slot::A13].imag());
    r.add("alpha24_re", ss.alpha[Slot::A24].real());
    r.add("alpha24_im", ss.alpha[Slot::A24].imag());
    r.add("denominator", ss.denominator);
    r.add("intensity_pi", intensity_pi(p, ss));
    r.add("intensity_sigma", intensity_sigma(p, ss));
    r.add("coh0", parts.coh0);
    r.add("inc0", parts.inc0);
    r.add("coh_cross", parts.coh_cross);
    r.add("inc_cross", parts.inc_cross);
    return r;
}

Report evolve_report(const RunConfig& c, const PhysParams& p) {
    const System sys(p);
    const auto times = c.time_grid();
    const Trajectory traj = evolve(sys, initial_vector(sys, c.initial), times);
    Report r;
    r.table.add_column("t", times);
    for (Slot s : {Slot::A11, Slot::A22, Slot::A33, Slot::A44}) {
        r.table.add_column(slot_name(s), traj.population(s));
    }
    for (Slot s : {Slot::A13, Slot::A24}) {
        std::vector<cplx> z;
        z.reserve(traj.states.size());
        for (const auto& st : traj.states) z.push_back(st[s]);
        r.table.add_column(std::string(slot_name(s)) + "_re", real_part(z));
        r.table.add_column(std::string(slot_name(s)) + "_im", imag_part(z));
    }
    return r;
}

Report intensity_report(const RunConfig& c, const PhysParams& p) {
    const System sys(p);
    const auto times = c.time_grid();
    const Trajectory traj = evolve(sys, initial_vector(sys, c.initial), times);
    Report r;
    r.add("I_pi_steady", intensity_pi(p, sys.steady()));
    r.table.add_column("t", times);
    r.table.add_column("I_pi", intensity_pi(p, traj));
    r.table.add_column("I_sigma", intensity_sigma(p, traj));
    r.table.add_column("A11", traj.population(Slot::A11));
    r.table.add_column("A22", traj.population(Slot::A22));
    return r;
}

Report g2_report(const RunConfig& c, const PhysParams& p) {
    const System sys(p);
    const auto taus = c.time_grid();
    Report r;
    r.table.add_column("tau", taus);
    r.table.add_column("g2", g2(sys, taus).channel("g2").real());
    return r;
}

Report aic_report(const RunConfig& c, const PhysParams& p, double phi) {
    const System sys(p);
    const auto taus = c.time_grid();
    const AicNormalization norm = aic_normalization(sys, phi);
    const CorrelationSeries series = aic(sys, phi, taus);
    Report r;
    r.add("mean_quadrature", norm.mean_quadrature);
    r.add("h_inf", norm.h_inf);
    r.table.add_column("tau", taus);
    if (wants(c.component, Component::Total)) r.table.add_column("h", series.channel("h").real());
    if (wants(c.component, Component::Second)) r.table.add_column("h2", series.channel("h2").real());
    if (wants(c.component, Component::Third)) r.table.add_column("h3", series.channel("h3").real());
    return r;
}

Report dipole_report(const RunConfig& c, const PhysParams& p) {
    const System sys(p);
    const auto taus = c.time_grid();
    const CorrelationSeries series = dipole_fluctuation_correlation(sys, taus);
    Report r;
    r.table.add_column("tau", taus);
    for (std::string_view name : {"total", "d13_31", "d24_42", "d13_42", "d24_31"}) {
        const auto& values = series.channel(name).values;
        r.table.add_column(std::string(name) + "_re", real_part(values));
        r.table.add_column(std::string(name) + "_im", imag_part(values));
    }
    return r;
}

Report spectrum_report(const RunConfig& c, const PhysParams& p) {
    const System sys(p);
    const auto omegas = c.frequency_grid(p);
    const SpectrumResult s = incoherent_spectrum(sys, omegas);
    Report r;
    r.add("coherent_weight", s.coherent_weight);
    r.table.add_column("omega", omegas);
    r.table.add_column("S_inc", s.channel("S_inc").values);
    return r;
}

Report qspectrum_report(const RunConfig& c, const PhysParams& p, double phi) {
    const System sys(p);
    const auto omegas = c.frequency_grid(p);
    const SpectrumResult s = quadrature_spectra(sys, phi, omegas);
    Report r;
    r.add("h_inf", aic_normalization(sys, phi).h_inf);
    r.table.add_column("omega", omegas);
    if (wants(c.component, Component::Second)) r.table.add_column("S2", s.channel("S2").values);
    if (wants(c.component, Component::Third)) r.table.add_column("S3", s.channel("S3").values);
    if (wants(c.component, Component::Total)) r.table.add_column("S", s.channel("S").values);
    return r;
}

Report variance_report(const PhysParams& p, double phi) {
    const VarianceReport v = variance(p, phi);
    Report r;
    r.add("V", v.V);
    r.add("V_moments", variance_from_moments(p, steady_state(p), phi));
    r.add("squeezed", v.squeezed);
    r.add("window_hi", v.window ? Value(v.window->hi) : Value());
    r.add("optimal_omega", opt(v.optimal_omega));
    r.add("optimal_omega_closed", opt(v.optimal_omega_closed));
    r.add("optimal_variance", opt(v.optimal_variance));
    r.add("window_printed_hi", v.window_printed ? Value(v.window_printed->hi) : Value());
    r.add("optimal_omega_printed", opt(v.optimal_omega_printed));
    r.add("optimal_variance_printed", opt(v.optimal_variance_printed));
    return r;
}

Report interference_report(const PhysParams& p) {
    const InterferenceReport m = interference_measures(p);
    Report r;
    r.add("C", m.C);
    r.add("K_alpha", m.K_alpha);
    r.add("K_printed", opt(m.K_printed));
    const auto& s = m.special_points;
    r.add("delta0", s ? Value(s->delta0) : Value());
    r.add("delta_min", s ? Value(s->delta_min) : Value());
    r.add("c_min", s ? Value(s->c_min) : Value());
    r.add("delta_half_plus", s ? Value(s->delta_half_plus) : Value());
    r.add("delta_half_minus", s ? Value(s->delta_half_minus) : Value());
    return r;
}

Report dressed_report(const PhysParams& p) {
    const DressedData d = dressed(p);
    Report r;
    r.add("E1_plus", d.E1_plus);
    r.add("E1_minus", d.E1_minus);
    r.add("E2_plus", d.E2_plus);
    r.add("E2_minus", d.E2_minus);
    r.add("Omega1", d.Omega1);
    r.add("Omega2", d.Omega2);
    r.add("Omega_av", d.Omega_av);
    r.add("Omega_beat", d.Omega_beat);
    r.add("Theta1", d.Theta1);
    r.add("Theta2", d.Theta2);
    r.add("depth1", d.depth1());
    r.add("depth2", d.depth2());
    return r;
}

Report beats_report(const RunConfig& c, const PhysParams& p) {
    const System sys(p);
    const auto times = c.time_grid();
    const double dt = times[1] - times[0];
    constexpr double kBandMin = 2.0;
    const double band_max = std::numbers::pi / dt;

    const Trajectory traj = evolve(sys, initial_vector(sys, c.initial), times);
    std::vector<double> ip = intensity_pi(p, traj);
    const double ip_inf = intensity_pi(p, sys.steady());
    std::vector<double> centered(ip.size());
    for (std::size_t k = 0; k < ip.size(); ++k) centered[k] = ip[k] - ip_inf;
    const auto from_intensity = signal::estimate_beats(centered, dt, kBandMin, band_max);

    std::vector<double> g = g2(sys, times).channel("g2").real();
    for (double& x : g) x -= 1.0;
    const auto from_g2 = signal::estimate_beats(g, dt, kBandMin, band_max);

    const DressedData d = dressed(p);
    const UnitaryBeatResult unitary = unitary_beat_model(p, c.a33, 1.0 - c.a33, times);

    Report r;
    r.add("Omega_av", d.Omega_av);
    r.add("Omega_beat", d.Omega_beat);
    r.add("resolution", from_intensity.resolution);
    r.add("intensity_carrier", from_intensity.peaks.empty() ? Value() : Value(from_intensity.carrier));
    r.add("intensity_envelope", from_intensity.peaks.empty() ? Value() : Value(from_intensity.envelope));
    r.add("intensity_peaks", static_cast<double>(from_intensity.peaks.size()));
    r.add("g2_carrier", from_g2.peaks.empty() ? Value() : Value(from_g2.carrier));
    r.add("g2_envelope", from_g2.peaks.empty() ? Value() : Value(from_g2.envelope));
    r.add("g2_peaks", static_cast<double>(from_g2.peaks.size()));
    r.add("optimal_ratio", opt(unitary.optimal_ratio));
    r.add("factorized", unitary.factorized);

    for (double& x : ip) x /= p.f_pi * p.f_pi;
    r.table.add_column("t", times);
    r.table.add_column("I_pi", ip);
    r.table.add_column("I_unitary", unitary.intensity);
    return r;
}

Report run_point(const RunConfig& c, Command command, const PhysParams& p, double phi) {
    switch (command) {
        case Command::Steady: return steady_report(p);
        case Command::Evolve: return evolve_report(c, p);
        case Command::Intensity: return intensity_report(c, p);
        case Command::G2: return g2_report(c, p);
        case Command::Aic: return aic_report(c, p, phi);
        case Command::Dipole: return dipole_report(c, p);
        case Command::Spectrum: return spectrum_report(c, p);
        case Command::QSpectrum: return qspectrum_report(c, p, phi);
        case Command::Variance: return variance_report(p, phi);
        case Command::Interference: return interference_report(p);
        case Command::Dressed: return dressed_report(p);
        case Command::Beats: return beats_report(c, p);
        case Command::Sweep: break;
    }
    throw ConfigError("sweep cannot be nested");
}

Report run_sweep(const RunConfig& c) {
    const std::size_t n = c.sweep_points.size();
    std::vector<Report> results(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < n; k = next++) {
            try {
                const SweepPoint& pt = c.sweep_points[k];
                results[k] = run_point(c, c.sweep_of, pt.params, pt.phi);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::min(sweep_threads(), n);
    {
        std::vector<std::jthread> pool;
        for (std::size_t k = 1; k < workers; ++k) pool.emplace_back(worker);
        worker();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    // Long format: one row per point per sample.
    Report out;
    Table& t = out.table;
    t.columns = {"point", "omega", "delta_l", "delta_z", "phi"};
    const Report& first = results.front();
    for (const auto& [name, value] : first.scalars) t.columns.push_back(name);
    for (const auto& name : first.table.columns) t.columns.push_back(name);
    for (std::size_t k = 0; k < n; ++k) {
        const SweepPoint& pt = c.sweep_points[k];
        std::vector<double> prefix = {static_cast<double>(k), pt.params.omega, pt.params.delta_l,
                                      pt.params.delta_z, pt.phi};
        for (const auto& [name, value] : results[k].scalars) {
            if (const auto* d = std::get_if<double>(&value)) prefix.push_back(*d);
            else if (const auto* b = std::get_if<bool>(&value)) prefix.push_back(*b ? 1.0 : 0.0);
            else prefix.push_back(kNaN);
        }
        if (!results[k].has_table()) {
            t.rows.push_back(std::move(prefix));
            continue;
        }
        for (const auto& row : results[k].table.rows) {
            std::vector<double> full = prefix;
            full.insert(full.end(), row.begin(), row.end());
            t.rows.push_back(std::move(full));
        }
    }
    return out;
}

}  // namespace

std::size_t sweep_threads() {
    if (const char* env = std::getenv("RFBEATS_THREADS")) {
        std::size_t n = 0;
        const char* end = env + std::strlen(env);
        const auto [ptr, ec] = std::from_chars(env, end, n);
        if (ec == std::errc{} && ptr == end && n > 0) return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

Report run(const RunConfig& config) {
    config.validate();
    if (config.command == Command::Sweep) return run_sweep(config);
    return run_point(config, config.command, config.params, config.phi);
}

}  // namespace rfbeats::cli
