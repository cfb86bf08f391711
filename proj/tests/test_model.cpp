#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "rfbeats/errors.hpp"
#include "rfbeats/model.hpp"

using namespace rfbeats;
using Catch::Matchers::WithinAbs;

namespace {

PhysParams params(double omega, double delta_l, double delta_z) {
    PhysParams p;
    p.omega = omega;
    p.delta_l = delta_l;
    p.delta_z = delta_z;
    return p;
}

}  // namespace

TEST_CASE("parameter validation", "[model]") {
    PhysParams p;
    CHECK_NOTHROW(p.validate());
    CHECK_THAT(p.gamma1(), WithinAbs(1.0 / 3.0, 1e-15));
    CHECK_THAT(p.gamma_sigma(), WithinAbs(2.0 / 3.0, 1e-15));
    CHECK_THAT(p.gamma12(), WithinAbs(-1.0 / 3.0, 1e-15));
    CHECK_THAT(p.f_sigma() * p.f_sigma(), WithinAbs(2.0 * p.f_pi * p.f_pi, 1e-14));

    p.gamma = 0.0;
    CHECK_THROWS_AS(p.validate(), InvalidParameters);
    p = PhysParams{};
    p.omega = -1.0;
    CHECK_THROWS_AS(p.validate(), InvalidParameters);
    p = PhysParams{};
    p.b_pi = 0.5;
    CHECK_THROWS_AS(p.validate(), InvalidParameters);
    p = PhysParams{};
    p.delta_z = std::nan("");
    CHECK_THROWS_AS(build_liouvillian(p), InvalidParameters);
}

TEST_CASE("slot bookkeeping", "[model]") {
    CHECK(slot_of(1, 3) == Slot::A13);
    CHECK(slot_of(4, 2) == Slot::A42);
    CHECK_FALSE(slot_of(1, 2).has_value());
    CHECK(std::string(slot_name(Slot::A44)) == "A44");
    CHECK_THROWS_AS(BlochVector(CVector::Zero(3)), DimensionMismatch);
}

TEST_CASE("undriven generator is block diagonal and conserves trace", "[model]") {
    const CMatrix m = build_liouvillian(params(0, 0, 0));
    // Populations do not couple to coherences.
    for (auto r : kPopulationSlots) {
        for (int c : {1, 3, 4, 6}) CHECK(m(r, c) == cplx{});
    }
    for (int c = 0; c < 8; ++c) {
        cplx sum = 0.0;
        for (auto r : kPopulationSlots) sum += m(r, c);
        CHECK(std::abs(sum) < 1e-15);
    }
}

TEST_CASE("population rows sum to zero column-wise for any parameters", "[model][property]") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> om(0, 20), dl(-5, 5), dz(-20, 5);
    for (int k = 0; k < 50; ++k) {
        const CMatrix m = build_liouvillian(params(om(rng), dl(rng), dz(rng)));
        for (int c = 0; c < 8; ++c) {
            cplx sum = 0.0;
            for (auto r : kPopulationSlots) sum += m(r, c);
            CHECK(std::abs(sum) < 1e-13);
        }
    }
}

TEST_CASE("steady state closed forms", "[model]") {
    const SteadyState ss = steady_state(params(9, 0, -8));
    CHECK_THAT(ss.denominator, WithinAbs(194.25, 1e-12));
    CHECK_THAT(ss.alpha[Slot::A11].real(), WithinAbs(0.208494, 1e-6));
    CHECK_THAT(ss.alpha[Slot::A13].real(), WithinAbs(0.0, 1e-15));
    CHECK_THAT(ss.alpha[Slot::A13].imag(), WithinAbs(0.011583, 1e-6));
    CHECK_THAT(ss.alpha[Slot::A24].real(), WithinAbs(-0.185328, 1e-6));
    CHECK_THAT(ss.alpha[Slot::A24].imag(), WithinAbs(-0.011583, 1e-6));

    const SteadyState s1 = steady_state(params(1, 0, 0));
    CHECK_THAT(s1.denominator, WithinAbs(2.25, 1e-15));
    CHECK_THAT(s1.alpha[Slot::A33].real(), WithinAbs(0.27778, 1e-5));
    CHECK_THAT(s1.alpha[Slot::A44].real(), WithinAbs(0.27778, 1e-5));
    CHECK_THAT(s1.alpha[Slot::A13].imag(), WithinAbs(0.11111, 1e-5));
    CHECK(s1.alpha[Slot::A13] == -s1.alpha[Slot::A24]);
    CHECK(s1.alpha.is_physical(1e-14));
}

TEST_CASE("degenerate Zeeman identities hold exactly", "[model][property]") {
    for (double omega : {0.3, 1.0, 7.0}) {
        for (double delta_l : {-2.0, 0.0, 1.5}) {
            const SteadyState ss = steady_state(params(omega, delta_l, 0));
            CHECK(ss.alpha[Slot::A13] == -ss.alpha[Slot::A24]);
            CHECK(ss.alpha[Slot::A33] == ss.alpha[Slot::A44]);
            CHECK(ss.alpha[Slot::A11] == ss.alpha[Slot::A22]);
        }
    }
}

TEST_CASE("closed and kernel steady states agree", "[model][property]") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> om(0.1, 20), dl(-5, 5), dz(-20, 0);
    for (int k = 0; k < 100; ++k) {
        const PhysParams p = params(om(rng), dl(rng), dz(rng));
        const SteadyState a = steady_state(p);
        const SteadyState b = steady_state_numeric(p);
        CHECK(numerics::max_abs(a.alpha.values() - b.alpha.values()) < 1e-10);
        const CVector resid = build_liouvillian(p) * a.alpha.values();
        CHECK(resid.cwiseAbs().maxCoeff() < 1e-12);
        CHECK(a.alpha[Slot::A31] == std::conj(a.alpha[Slot::A13]));
        CHECK(a.alpha[Slot::A42] == std::conj(a.alpha[Slot::A24]));
    }
}

TEST_CASE("undriven steady state uses the closed-form limit", "[model]") {
    const PhysParams p = params(0, 1, -2);
    CHECK_THROWS_AS(steady_state_numeric(p), DegenerateKernel);
    const SteadyState ss = steady_state(p);
    CHECK(ss.alpha[Slot::A11] == cplx{});
    CHECK(ss.alpha[Slot::A22] == cplx{});
    CHECK_THAT((ss.alpha[Slot::A33] + ss.alpha[Slot::A44]).real(), WithinAbs(1.0, 1e-15));
    CHECK(numerics::max_abs(build_liouvillian(p) * ss.alpha.values()) < 1e-15);
}

TEST_CASE("full alpha lookup", "[model]") {
    const SteadyState ss = steady_state(params(2, 1, -1));
    CHECK(ss.at(1, 2) == cplx{});
    CHECK(ss.at(3, 4) == cplx{});
    CHECK(ss.at(3, 1) == ss.alpha[Slot::A31]);
    CHECK_THROWS_AS(ss.at(0, 1), DimensionMismatch);
}

TEST_CASE("Zeeman difference from Lande factors", "[model]") {
    CHECK_THAT(delta_from_field(2.0 / 3.0, 2.0, 3.0), WithinAbs(-2.0, 1e-14));
    CHECK_THAT(delta_from_field(1.0, 1.0, 5.0), WithinAbs(0.0, 1e-15));
    CHECK_THAT(delta_from_field(1.0, 2.0, 4.0), WithinAbs(-2.0, 1e-15));
    CHECK_THROWS_AS(delta_from_field(1.0, 0.0, 1.0), ZeroLande);
}
