#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "rfbeats/analytics.hpp"
#include "rfbeats/dynamics.hpp"
#include "rfbeats/errors.hpp"
#include "rfbeats/numerics.hpp"

using namespace rfbeats;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

PhysParams params(double omega, double delta_l, double delta_z) {
    PhysParams p;
    p.omega = omega;
    p.delta_l = delta_l;
    p.delta_z = delta_z;
    return p;
}

constexpr double kHalfPi = std::numbers::pi / 2.0;

std::vector<double> maxima_times(const std::vector<double>& t, const std::vector<double>& y) {
    std::vector<double> out;
    for (std::size_t k = 1; k + 1 < t.size(); ++k) {
        if (y[k] > y[k - 1] && y[k] >= y[k + 1]) out.push_back(t[k]);
    }
    return out;
}

}  // namespace

TEST_CASE("dressed-state frequencies", "[analytics]") {
    const auto d = dressed(params(9, 0, -8));
    CHECK_THAT(d.Omega1, WithinAbs(18.0, 1e-12));
    CHECK_THAT(d.Omega2, WithinAbs(19.6977, 1e-4));
    CHECK_THAT(d.Omega_av, WithinAbs(18.8489, 1e-4));
    CHECK_THAT(d.Omega_beat, WithinAbs(0.8489, 1e-4));
    CHECK_THAT(d.Theta1, WithinAbs(std::numbers::pi / 4.0, 1e-14));
    CHECK_THAT(d.E1_plus - d.E1_minus, WithinAbs(d.Omega1, 1e-12));
    CHECK_THAT(d.E2_plus - d.E2_minus, WithinAbs(d.Omega2, 1e-12));
    CHECK_THAT(d.depth1(), WithinAbs(1.0, 1e-14));
    CHECK_THAT(d.depth2(), WithinAbs(324.0 / 388.0, 1e-12));

    CHECK_THAT(dressed(params(2, 1.5, 3)).Omega_beat, WithinAbs(0.0, 1e-14));

    PhysParams shifted = params(9, 0, -8);
    shifted.b_ell = 0.7;
    const auto ds = dressed(shifted);
    CHECK_THAT(ds.E2_plus - d.E2_plus, WithinAbs(0.7, 1e-12));
    CHECK(ds.E1_plus == d.E1_plus);
    CHECK(ds.Omega2 == d.Omega2);

    const auto weak = dressed(params(0, 1, -1));
    CHECK(weak.depth1() == 0.0);
    CHECK(weak.depth2() == 0.0);
}

TEST_CASE("dressed frequencies match Liouvillian eigenvalues at strong drive",
          "[analytics][property]") {
    auto deviation = [](const PhysParams& p) {
        const auto ev = numerics::eig_decompose(build_liouvillian(p)).eigenvalues();
        const auto d = dressed(p);
        double worst = 0.0;
        for (double target : {d.Omega1, d.Omega2}) {
            double best = 1e300;
            for (int i = 0; i < ev.size(); ++i) {
                best = std::min(best, std::abs(std::abs(ev(i).imag()) - target));
            }
            worst = std::max(worst, best);
        }
        return worst;
    };
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> om(5, 20), dl(-3, 3), dz(-20, 0);
    int tested = 0;
    while (tested < 40) {
        const PhysParams p = params(om(rng), dl(rng), dz(rng));
        // Resolved sidebands only; see below.
        if (std::abs(dressed(p).Omega_beat) < 0.25) continue;
        CHECK(deviation(p) < 0.1);
        ++tested;
    }
    // When the two sidebands overlap within their widths the damped modes
    // hybridize and the shift exceeds 0.1.
    CHECK(deviation(params(19, 0, -5)) > 0.1);
}

TEST_CASE("interference coefficient and its special points", "[analytics]") {
    CHECK_THAT(interference_c(params(1, 0, 0)), WithinAbs(1.0, 1e-15));

    const auto r = interference_measures(params(1, 2, 0));
    REQUIRE(r.special_points.has_value());
    const auto& s = *r.special_points;
    CHECK_THAT(s.delta0, WithinAbs(2.125, 1e-14));
    CHECK_THAT(s.delta_min, WithinAbs(4.25, 1e-14));
    CHECK_THAT(s.c_min, WithinAbs(-8.0 / 9.0, 1e-14));
    CHECK_THAT(interference_c(params(1, 2, s.delta0)), WithinAbs(0.0, 1e-14));
    CHECK_THAT(interference_c(params(1, 2, s.delta_min)), WithinAbs(s.c_min, 1e-14));
    CHECK_THAT(interference_c(params(1, 2, s.delta_half_plus)), WithinAbs(0.5, 1e-12));
    CHECK_THAT(interference_c(params(1, 2, s.delta_half_minus)), WithinAbs(0.5, 1e-12));
    for (double dz : numerics::linspace(-20, 20, 401)) {
        CHECK(interference_c(params(1, 2, dz)) >= s.c_min - 1e-12);
    }

    CHECK_FALSE(interference_measures(params(1, 0, -3)).special_points.has_value());
}

TEST_CASE("interference C matches the coherent intensity split", "[analytics][property]") {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> om(0.05, 10), dl(-5, 5), dz(-15, 5);
    for (int k = 0; k < 40; ++k) {
        const PhysParams p = params(om(rng), dl(rng), dz(rng));
        const auto parts = decompose_intensity(steady_state(p));
        CHECK_THAT(parts.coh_cross, WithinAbs(interference_c(p) * parts.coh0, 1e-13));
        const auto r = interference_measures(p);
        CHECK_THAT(r.K_alpha, WithinAbs(parts.inc_cross / parts.inc0, 1e-15));
        CHECK(std::abs(r.K_alpha) <= 1.0);
    }
    CHECK_THROWS_AS(interference_measures(params(0, 1, -1)), DivisionByZero);
}

TEST_CASE("closed-form variance agrees with the moment form", "[analytics][property]") {
    std::mt19937 rng(12);
    std::uniform_real_distribution<double> om(0.0, 10), dl(-5, 5), dz(-15, 5), ph(0, 2 * M_PI);
    for (int k = 0; k < 200; ++k) {
        const PhysParams p = params(om(rng), dl(rng), dz(rng));
        const double phi = ph(rng);
        CHECK_THAT(variance_value(p, phi),
                   WithinAbs(variance_from_moments(p, steady_state(p), phi), 1e-12));
    }
}

TEST_CASE("variance limits and resonant optimum", "[analytics]") {
    CHECK(variance_value(params(0, 1, -2), 0.3) == 0.0);
    CHECK_THAT(variance_value(params(1e4, 0.5, -1), kHalfPi), WithinAbs(0.25, 1e-6));

    const double w_opt = 1.0 / (2.0 * std::sqrt(6.0));
    CHECK_THAT(variance_value(params(w_opt, 0, 0), kHalfPi), WithinAbs(-1.0 / 32.0, 1e-12));

    const auto r = variance(params(0.3, 0, 0), kHalfPi);
    REQUIRE(r.window.has_value());
    REQUIRE(r.optimal_omega.has_value());
    CHECK_THAT(*r.optimal_omega_closed, WithinAbs(w_opt, 1e-14));
    CHECK_THAT(*r.optimal_omega, WithinAbs(w_opt, 1e-6));
    CHECK_THAT(*r.optimal_variance, WithinAbs(-1.0 / 32.0, 1e-12));
    CHECK_THAT(r.window->hi, WithinAbs(0.5 * std::sqrt(0.5), 1e-14));
    CHECK_THAT(*r.optimal_omega_printed, WithinAbs(w_opt, 1e-14));
    CHECK_THAT(*r.optimal_variance_printed, WithinAbs(-1.0 / 32.0, 1e-14));
    CHECK(r.squeezed == (r.V < 0.0));
}

TEST_CASE("in-phase squeezing window under detuning", "[analytics]") {
    const auto r = variance(params(0.5, 2, 0), 0.0);
    REQUIRE(r.window.has_value());
    REQUIRE(r.window_printed.has_value());
    CHECK_THAT(r.window->hi, WithinAbs(1.36931, 1e-5));
    CHECK_THAT(r.window_printed->hi, WithinAbs(r.window->hi, 1e-12));
    CHECK(variance_value(params(r.window->hi * 0.999, 2, 0), 0.0) < 0.0);
    CHECK(variance_value(params(r.window->hi * 1.001, 2, 0), 0.0) > 0.0);

    // No in-phase squeezing at resonance.
    CHECK_FALSE(variance(params(0.5, 0, 0), 0.0).window.has_value());

    // Deep optimum approaches -1/32 for large detuning.
    const auto far = variance(params(1, 200, 0), 0.0);
    REQUIRE(far.optimal_variance.has_value());
    CHECK_THAT(*far.optimal_variance, WithinAbs(-1.0 / 32.0, 1e-4));
    CHECK_THAT(*far.optimal_omega, WithinAbs(*far.optimal_omega_closed, 1e-6 * 200));
}

TEST_CASE("out-of-phase squeezing region is an ellipse", "[analytics][property]") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> om(0.0, 0.4), dl(-0.6, 0.6), dz(-1, 1);
    int inside = 0;
    for (int k = 0; k < 2000; ++k) {
        const double w = om(rng), D = dl(rng), d = dz(rng);
        const double lhs = 4 * w * w + d * d / 2 + 2 * (D - d / 2) * (D - d / 2);
        if (std::abs(lhs - 0.5) < 1e-9) continue;
        const bool in_ellipse = lhs < 0.5;
        inside += in_ellipse;
        CHECK((variance_value(params(w, D, d), kHalfPi) < 0.0) == in_ellipse);
    }
    CHECK(inside > 100);
}

TEST_CASE("variance equals the integrated squeezing spectrum", "[analytics][oracle]") {
    for (auto [w, dl, dz, phi] : {std::tuple{0.25, 0.0, 0.0, kHalfPi}, {1.0, 0.0, 0.0, kHalfPi},
                                  {0.5, 2.0, 0.0, 0.0}, {3.0, 1.0, -4.0, 0.7}}) {
        const PhysParams p = params(w, dl, dz);
        const double exact = variance_value(p, phi);
        const double integrated = variance_from_spectrum(System(p), phi);
        CHECK(std::abs(integrated - exact) < 1e-4 * std::max(std::abs(exact), 1e-2));
    }
}

TEST_CASE("unitary beat model", "[analytics]") {
    const PhysParams p = params(9, 0, -8);
    const auto t = numerics::linspace(0, 3, 3001);

    CHECK_THROWS_AS(unitary_beat_model(p, 0.6, 0.6, t), InvalidPopulations);
    CHECK_THROWS_AS(unitary_beat_model(p, -0.1, 1.1, t), InvalidPopulations);

    const auto single = unitary_beat_model(p, 1.0, 0.0, t);
    const auto m = maxima_times(single.times, single.intensity);
    REQUIRE(m.size() >= 2);
    CHECK_THAT(m[1] - m[0], WithinAbs(2.0 * M_PI / 18.0, 2e-3));

    const auto d = dressed(p);
    const double ratio = d.depth2() / d.depth1();
    const auto probe = unitary_beat_model(p, 0.5, 0.5, t);
    REQUIRE(probe.optimal_ratio.has_value());
    CHECK_THAT(*probe.optimal_ratio, WithinAbs(ratio, 1e-14));
    CHECK_FALSE(probe.factorized);

    const double a33 = ratio / (1.0 + ratio);
    const auto fact = unitary_beat_model(p, a33, 1.0 - a33, t);
    REQUIRE(fact.factorized);
    for (std::size_t k = 0; k < t.size(); ++k) {
        const double model =
            fact.amplitude * (1.0 - std::cos(d.Omega_beat * t[k]) * std::cos(d.Omega_av * t[k]));
        CHECK_THAT(fact.intensity[k], WithinAbs(model, 1e-12));
    }
}

TEST_CASE("unitary model tracks the damped evolution at short times", "[analytics]") {
    const PhysParams p = params(9, 0, -8);
    const System sys(p);
    const auto t = numerics::linspace(0, 3, 3001);
    const auto unitary = unitary_beat_model(p, 0.5, 0.5, t);
    const auto traj = evolve(sys, initial_state(sys, InitialPreset::EqualGround), t);
    const auto damped = intensity_pi(p, traj);
    const auto mu = maxima_times(t, unitary.intensity);
    const auto md = maxima_times(t, damped);
    REQUIRE(mu.size() >= 8);
    REQUIRE(md.size() >= mu.size());
    for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(mu[k] - md[k]) < 0.02);
}
