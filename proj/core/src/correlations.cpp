#include "rfbeats/correlations.hpp"

#include <cmath>
#include <stdexcept>

#include "rfbeats/errors.hpp"

namespace rfbeats {

namespace {

constexpr cplx I{0.0, 1.0};

struct SlotIndex {
    int k;
    int l;
};

SlotIndex slot_index(Slot s) {
    const char* n = slot_name(s);
    return {n[1] - '0', n[2] - '0'};
}

double kd(int a, int b) { return a == b ? 1.0 : 0.0; }

template <typename F>
CVector over_slots(F&& entry) {
    CVector v(kBlochDim);
    for (Slot s : kAllSlots) {
        const auto [k, l] = slot_index(s);
        v(static_cast<int>(s)) = entry(k, l);
    }
    return v;
}

void require_intensity(const System& system) {
    if (!(system.steady().intensity() > 0.0)) {
        throw ZeroIntensity("stationary intensity vanishes (omega = 0)");
    }
}

}  // namespace

MomentRules::MomentRules(const SteadyState& ss) {
    for (int j = 1; j <= 4; ++j) {
        for (int k = 1; k <= 4; ++k) alpha_[j - 1][k - 1] = ss.at(j, k);
    }
}

cplx MomentRules::mean(int j, int k) const {
    if (j < 1 || j > 4 || k < 1 || k > 4) throw DimensionMismatch("operator index out of range");
    return alpha_[j - 1][k - 1];
}

cplx MomentRules::pair(int k, int l, int m, int n) const { return mean(k, n) * kd(l, m); }

cplx MomentRules::triple(int i, int j, int k, int l, int m, int n) const {
    return mean(i, n) * kd(j, k) * kd(l, m);
}

cplx MomentRules::fluct_pair(int k, int l, int m, int n) const {
    return pair(k, l, m, n) - mean(k, l) * mean(m, n);
}

cplx MomentRules::fluct_triple(int i, int j, int k, int l, int m, int n) const {
    const cplx aij = mean(i, j), akl = mean(k, l), amn = mean(m, n);
    return triple(i, j, k, l, m, n) - amn * pair(i, j, k, l) - akl * pair(i, j, m, n) -
           aij * pair(k, l, m, n) + 2.0 * aij * akl * amn;
}

namespace initial_vectors {

CVector left(const MomentRules& rules, int i, int j) {
    return over_slots([&](int k, int l) { return rules.pair(i, j, k, l); });
}

CVector sandwich(const MomentRules& rules, int i, int j, int m, int n) {
    return over_slots([&](int k, int l) { return rules.triple(i, j, k, l, m, n); });
}

CVector fluct_left(const MomentRules& rules, int i, int j) {
    return over_slots([&](int k, int l) { return rules.fluct_pair(i, j, k, l); });
}

CVector fluct_sandwich(const MomentRules& rules, int i, int j, int m, int n) {
    return over_slots([&](int k, int l) { return rules.fluct_triple(i, j, k, l, m, n); });
}

CVector field_sandwich(const MomentRules& rules) {
    return sandwich(rules, 1, 3, 3, 1) - sandwich(rules, 1, 3, 4, 2) -
           sandwich(rules, 2, 4, 3, 1) + sandwich(rules, 2, 4, 4, 2);
}

CVector field_fluct_left(const MomentRules& rules) {
    return fluct_left(rules, 1, 3) - fluct_left(rules, 2, 4);
}

CVector field_fluct_sandwich(const MomentRules& rules) {
    return fluct_sandwich(rules, 1, 3, 3, 1) - fluct_sandwich(rules, 1, 3, 4, 2) -
           fluct_sandwich(rules, 2, 4, 3, 1) + fluct_sandwich(rules, 2, 4, 4, 2);
}

}  // namespace initial_vectors

cplx field_minus(const CVector& x) {
    return x(static_cast<int>(Slot::A13)) - x(static_cast<int>(Slot::A24));
}

cplx field_plus(const CVector& x) {
    return x(static_cast<int>(Slot::A31)) - x(static_cast<int>(Slot::A42));
}

cplx population_trace(const CVector& x) {
    cplx sum = 0.0;
    for (auto i : kPopulationSlots) sum += x(i);
    return sum;
}

std::vector<double> Channel::real() const {
    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(v.real());
    return out;
}

std::vector<double> Channel::imag() const {
    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(v.imag());
    return out;
}

const Channel& CorrelationSeries::channel(std::string_view name) const {
    for (const auto& c : channels) {
        if (c.name == name) return c;
    }
    throw std::out_of_range("no channel named " + std::string(name));
}

std::vector<CVector> qrf_correlate(const System& system, const CVector& w0,
                                   std::span<const double> taus) {
    return system.propagator().apply(taus, w0);
}

CorrelationSeries g2(const System& system, std::span<const double> taus) {
    require_intensity(system);
    const MomentRules rules(system.steady());
    const double intensity = system.steady().intensity();

    CorrelationSeries out;
    out.taus.assign(taus.begin(), taus.end());
    out.normalization = intensity * intensity;
    const CVector u = initial_vectors::field_sandwich(rules);
    out.initial_conditions.push_back({"<E- R E+>", u});

    Channel ch{"g2", {}};
    ch.values.reserve(taus.size());
    for (const auto& x : qrf_correlate(system, u, taus)) {
        const cplx g = x(static_cast<int>(Slot::A11)) + x(static_cast<int>(Slot::A22));
        ch.values.push_back(g / out.normalization);
    }
    out.channels.push_back(std::move(ch));
    return out;
}

CorrelationSeries dipole_fluctuation_correlation(const System& system,
                                                 std::span<const double> taus) {
    require_intensity(system);
    const MomentRules rules(system.steady());
    const CVector w13 = initial_vectors::fluct_left(rules, 1, 3);
    const CVector w24 = initial_vectors::fluct_left(rules, 2, 4);

    CorrelationSeries out;
    out.taus.assign(taus.begin(), taus.end());
    out.initial_conditions.push_back({"<dA13 dR>", w13});
    out.initial_conditions.push_back({"<dA24 dR>", w24});

    const auto x13 = qrf_correlate(system, w13, taus);
    const auto x24 = qrf_correlate(system, w24, taus);
    const int s31 = static_cast<int>(Slot::A31);
    const int s42 = static_cast<int>(Slot::A42);

    Channel total{"total", {}}, d1331{"d13_31", {}}, d2442{"d24_42", {}}, d1342{"d13_42", {}},
        d2431{"d24_31", {}};
    for (std::size_t k = 0; k < taus.size(); ++k) {
        d1331.values.push_back(x13[k](s31));
        d2442.values.push_back(x24[k](s42));
        d1342.values.push_back(x13[k](s42));
        d2431.values.push_back(x24[k](s31));
        total.values.push_back(x13[k](s31) + x24[k](s42) - x13[k](s42) - x24[k](s31));
    }
    out.channels = {std::move(total), std::move(d1331), std::move(d2442), std::move(d1342),
                    std::move(d2431)};
    return out;
}

AicNormalization aic_normalization(const System& system, double phi) {
    require_intensity(system);
    AicNormalization n;
    n.mean_field = system.steady().mean_field();
    n.mean_quadrature = (n.mean_field * std::exp(-I * phi)).real();
    n.intensity = system.steady().intensity();
    if (std::abs(n.mean_quadrature) <= 1e-10 * std::abs(n.mean_field) ||
        n.mean_quadrature == 0.0) {
        throw VanishingMeanQuadrature("mean quadrature Re(<E-> e^{-i phi}) vanishes at phi = " +
                                      std::to_string(phi));
    }
    n.h_inf = n.intensity * n.mean_quadrature;
    return n;
}

CorrelationSeries aic(const System& system, double phi, std::span<const double> taus) {
    const AicNormalization norm = aic_normalization(system, phi);
    const MomentRules rules(system.steady());
    const cplx rot = std::exp(-I * phi);
    const cplx e_plus = std::conj(norm.mean_field);

    const CVector u = initial_vectors::field_sandwich(rules);
    const CVector w = initial_vectors::field_fluct_left(rules);
    const CVector u3 = initial_vectors::field_fluct_sandwich(rules);

    CorrelationSeries out;
    out.taus.assign(taus.begin(), taus.end());
    out.normalization = norm.h_inf;
    out.initial_conditions = {{"<E- R E+>", u}, {"<dE- dR>", w}, {"<dE- dR dE+>", u3}};

    const auto xu = qrf_correlate(system, u, taus);
    const auto xw = qrf_correlate(system, w, taus);
    const auto x3 = qrf_correlate(system, u3, taus);

    Channel h{"h", {}}, h2{"h2", {}}, h3{"h3", {}};
    for (std::size_t k = 0; k < taus.size(); ++k) {
        const double H = (rot * field_minus(xu[k])).real();
        const double H2 =
            (e_plus * (rot * field_minus(xw[k]) + std::conj(rot) * field_plus(xw[k]))).real();
        const double H3 = (rot * field_minus(x3[k])).real();
        h.values.push_back(H / norm.h_inf);
        h2.values.push_back(H2 / norm.h_inf);
        h3.values.push_back(H3 / norm.h_inf);
    }
    out.channels = {std::move(h), std::move(h2), std::move(h3)};
    return out;
}

double aic_h2_initial(const PhysParams& p) {
    const double a = 2.0 * p.delta_l - p.delta_z;
    return 1.0 - (a * a + p.gamma * p.gamma) / (2.0 * steady_denominator(p));
}

double aic_h3_initial(const PhysParams& p) {
    const double a = 2.0 * p.delta_l - p.delta_z;
    return (a * a + p.gamma * p.gamma) / (2.0 * steady_denominator(p)) - 2.0;
}

}  // namespace rfbeats
