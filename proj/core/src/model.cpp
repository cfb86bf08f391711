#include "rfbeats/model.hpp"

#include <cmath>
#include <sstream>

#include "rfbeats/errors.hpp"

namespace rfbeats {

namespace {

constexpr cplx I{0.0, 1.0};

int idx(Slot s) { return static_cast<int>(s); }

}  // namespace

double PhysParams::f_sigma() const { return std::sqrt(2.0) * f_pi; }

void PhysParams::validate() const {
    auto finite = [](double x) { return std::isfinite(x); };
    if (!finite(omega) || !finite(delta_l) || !finite(delta_z) || !finite(gamma) ||
        !finite(b_pi) || !finite(b_sigma) || !finite(f_pi)) {
        throw InvalidParameters("parameters must be finite");
    }
    if (gamma <= 0.0) throw InvalidParameters("gamma must be positive");
    if (omega < 0.0) throw InvalidParameters("omega must be non-negative");
    if (b_pi < 0.0 || b_sigma < 0.0 || std::abs(b_pi + b_sigma - 1.0) > 1e-12) {
        throw InvalidParameters("branching fractions must be non-negative and sum to 1");
    }
}

std::string PhysParams::describe() const {
    std::ostringstream os;
    os.precision(17);
    os << "omega=" << omega << " delta_l=" << delta_l << " delta_z=" << delta_z
       << " gamma=" << gamma << " b_pi=" << b_pi << " b_sigma=" << b_sigma << " f_pi=" << f_pi;
    if (b_ell) os << " b_ell=" << *b_ell;
    if (g_u) os << " g_u=" << *g_u;
    if (g_ell) os << " g_ell=" << *g_ell;
    return os.str();
}

const char* slot_name(Slot s) {
    switch (s) {
        case Slot::A11: return "A11";
        case Slot::A13: return "A13";
        case Slot::A22: return "A22";
        case Slot::A24: return "A24";
        case Slot::A31: return "A31";
        case Slot::A33: return "A33";
        case Slot::A42: return "A42";
        case Slot::A44: return "A44";
    }
    return "?";
}

std::optional<Slot> slot_of(int j, int k) {
    for (Slot s : kAllSlots) {
        const char* n = slot_name(s);
        if (n[1] - '0' == j && n[2] - '0' == k) return s;
    }
    return std::nullopt;
}

BlochVector::BlochVector() : values_(CVector::Zero(kBlochDim)) {}

BlochVector::BlochVector(CVector values) : values_(std::move(values)) {
    if (values_.size() != kBlochDim) {
        throw DimensionMismatch("BlochVector needs 8 entries, got " +
                                std::to_string(values_.size()));
    }
}

BlochVector BlochVector::from_populations(double a11, double a22, double a33, double a44) {
    BlochVector r;
    r[Slot::A11] = a11;
    r[Slot::A22] = a22;
    r[Slot::A33] = a33;
    r[Slot::A44] = a44;
    return r;
}

cplx BlochVector::population_sum() const {
    return (*this)[Slot::A11] + (*this)[Slot::A22] + (*this)[Slot::A33] + (*this)[Slot::A44];
}

double BlochVector::pi_population() const {
    return ((*this)[Slot::A11] + (*this)[Slot::A22]).real();
}

bool BlochVector::is_physical(double tol) const {
    if (!values_.allFinite()) return false;
    if (std::abs(population_sum() - 1.0) > tol) return false;
    for (Slot s : {Slot::A11, Slot::A22, Slot::A33, Slot::A44}) {
        const cplx v = (*this)[s];
        if (std::abs(v.imag()) > tol || v.real() < -tol || v.real() > 1.0 + tol) return false;
    }
    return std::abs((*this)[Slot::A31] - std::conj((*this)[Slot::A13])) <= tol &&
           std::abs((*this)[Slot::A42] - std::conj((*this)[Slot::A24])) <= tol;
}

cplx SteadyState::at(int j, int k) const {
    if (j < 1 || j > 4 || k < 1 || k > 4) {
        throw DimensionMismatch("operator index out of range 1..4");
    }
    const auto s = slot_of(j, k);
    return s ? alpha[*s] : cplx{0.0, 0.0};
}

double SteadyState::intensity() const { return alpha.pi_population(); }

cplx SteadyState::mean_field() const { return alpha[Slot::A13] - alpha[Slot::A24]; }

double steady_denominator(const PhysParams& p) {
    const double g = p.gamma, d = p.delta_z, D = p.delta_l;
    return 2.0 * p.omega * p.omega + (g * g + d * d) / 4.0 + (D - d / 2.0) * (D - d / 2.0);
}

CMatrix build_liouvillian(const PhysParams& p) {
    p.validate();
    const double W = p.omega;
    const double g = p.gamma;
    const double D = p.delta_l;
    const double Dd = p.delta_l - p.delta_z;
    const double g1 = p.gamma1(), g2 = p.gamma2(), gs = p.gamma_sigma();

    CMatrix m = CMatrix::Zero(kBlochDim, kBlochDim);
    auto set = [&](Slot row, Slot col, cplx v) { m(idx(row), idx(col)) = v; };

    set(Slot::A11, Slot::A11, -g);
    set(Slot::A11, Slot::A13, -I * W);
    set(Slot::A11, Slot::A31, I * W);

    set(Slot::A13, Slot::A11, -I * W);
    set(Slot::A13, Slot::A13, -(g / 2.0 + I * D));
    set(Slot::A13, Slot::A33, I * W);

    set(Slot::A22, Slot::A22, -g);
    set(Slot::A22, Slot::A24, I * W);
    set(Slot::A22, Slot::A42, -I * W);

    set(Slot::A24, Slot::A22, I * W);
    set(Slot::A24, Slot::A24, -(g / 2.0 + I * Dd));
    set(Slot::A24, Slot::A44, -I * W);

    set(Slot::A31, Slot::A11, I * W);
    set(Slot::A31, Slot::A31, -(g / 2.0 - I * D));
    set(Slot::A31, Slot::A33, -I * W);

    set(Slot::A33, Slot::A11, g1);
    set(Slot::A33, Slot::A13, I * W);
    set(Slot::A33, Slot::A22, gs);
    set(Slot::A33, Slot::A31, -I * W);

    set(Slot::A42, Slot::A22, -I * W);
    set(Slot::A42, Slot::A42, -(g / 2.0 - I * Dd));
    set(Slot::A42, Slot::A44, I * W);

    set(Slot::A44, Slot::A11, gs);
    set(Slot::A44, Slot::A22, g2);
    set(Slot::A44, Slot::A24, -I * W);
    set(Slot::A44, Slot::A42, I * W);
    return m;
}

SteadyState steady_state(const PhysParams& p) {
    p.validate();
    const double W = p.omega, g = p.gamma, D = p.delta_l, d = p.delta_z;
    const double den = steady_denominator(p);
    const double two_den = 2.0 * den;

    SteadyState ss;
    ss.denominator = den;
    BlochVector& a = ss.alpha;
    a[Slot::A11] = W * W / two_den;
    a[Slot::A22] = W * W / two_den;
    a[Slot::A33] = (W * W + g * g / 4.0 + D * D) / two_den;
    a[Slot::A44] = (W * W + g * g / 4.0 + (D - d) * (D - d)) / two_den;
    a[Slot::A13] = W * cplx(D, g / 2.0) / two_den;
    a[Slot::A24] = W * cplx(d - D, -g / 2.0) / two_den;
    a[Slot::A31] = std::conj(a[Slot::A13]);
    a[Slot::A42] = std::conj(a[Slot::A24]);
    return ss;
}

SteadyState steady_state_numeric(const PhysParams& p) {
    const CMatrix m = build_liouvillian(p);
    CVector v = numerics::null_vector(m, kPopulationSlots);
    SteadyState ss;
    ss.denominator = steady_denominator(p);
    ss.alpha = BlochVector(std::move(v));
    return ss;
}

double delta_from_field(double g_u, double g_ell, double b_ell) {
    if (g_ell == 0.0) throw ZeroLande("lower-level Lande factor must be nonzero");
    return (g_u - g_ell) / g_ell * b_ell;
}

System::System(PhysParams p)
    : params_((p.validate(), std::move(p))),
      liouvillian_(build_liouvillian(params_)),
      propagator_(liouvillian_),
      steady_(steady_state(params_)) {}

}  // namespace rfbeats
