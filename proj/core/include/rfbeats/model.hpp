#pragma once

#include <array>
#include <optional>
#include <string>

#include "rfbeats/numerics.hpp"

namespace rfbeats {

using numerics::cplx;
using numerics::CMatrix;
using numerics::CVector;

/// Drive, detuning, Zeeman and decay parameters. All rates and frequencies
/// are in units of the total decay rate; `gamma` defaults to 1.
struct PhysParams {
    double omega = 1.0;    // Rabi frequency
    double delta_l = 0.0;  // laser detuning
    double delta_z = 0.0;  // difference Zeeman splitting
    double gamma = 1.0;
    double b_pi = 1.0 / 3.0;
    double b_sigma = 2.0 / 3.0;
    double f_pi = 1.0;

    // Informational: ground splitting and Lande factors.
    std::optional<double> b_ell;
    std::optional<double> g_u;
    std::optional<double> g_ell;

    double gamma1() const { return b_pi * gamma; }
    double gamma2() const { return b_pi * gamma; }
    double gamma_sigma() const { return b_sigma * gamma; }
    /// Cross-damping rate; does not enter the reduced dynamics.
    double gamma12() const { return -gamma1(); }
    double f_sigma() const;

    /// Throws InvalidParameters on non-finite values, gamma <= 0, omega < 0
    /// or branching fractions that do not sum to one.
    void validate() const;

    std::string describe() const;
};

/// Slots of the reduced Bloch vector.
enum class Slot : int { A11 = 0, A13, A22, A24, A31, A33, A42, A44 };

inline constexpr int kBlochDim = 8;
inline constexpr std::array<Slot, 8> kAllSlots = {Slot::A11, Slot::A13, Slot::A22, Slot::A24,
                                                  Slot::A31, Slot::A33, Slot::A42, Slot::A44};
inline constexpr std::array<numerics::Index, 4> kPopulationSlots = {0, 2, 5, 7};

const char* slot_name(Slot s);

/// Slot for the operator A_jk, or nullopt if the pair is not part of the
/// reduced system (j, k in 1..4).
std::optional<Slot> slot_of(int j, int k);

/// Eight complex expectation values in slot order.
class BlochVector {
public:
    BlochVector();
    explicit BlochVector(CVector values);

    static BlochVector from_populations(double a11, double a22, double a33, double a44);

    cplx operator[](Slot s) const { return values_(static_cast<int>(s)); }
    cplx& operator[](Slot s) { return values_(static_cast<int>(s)); }

    const CVector& values() const { return values_; }

    cplx population_sum() const;
    double pi_population() const;  // Re(A11 + A22)

    /// Population sum 1, real populations in [0, 1] and conjugate pairing of
    /// the coherences, all within `tol`.
    bool is_physical(double tol = 1e-9) const;

private:
    CVector values_;
};

/// Stationary expectation values and the common denominator D.
struct SteadyState {
    BlochVector alpha;
    double denominator = 0.0;

    /// Full 4x4 lookup of alpha_jk (1-based). Pairs outside the reduced
    /// system (A12, A14, A23, A34 and conjugates) vanish in steady state.
    cplx at(int j, int k) const;

    double intensity() const;  // alpha11 + alpha22
    /// Mean field amplitude alpha13 - alpha24.
    cplx mean_field() const;
};

/// D = 2 Omega^2 + (gamma^2 + delta^2)/4 + (Delta - delta/2)^2.
double steady_denominator(const PhysParams& p);

/// The 8x8 generator M with d<R>/dt = M <R>.
CMatrix build_liouvillian(const PhysParams& p);

/// Closed-form steady state. Well defined for omega = 0 too, where it picks
/// the limit of the driven solution out of a two-dimensional kernel.
SteadyState steady_state(const PhysParams& p);

/// Steady state from the kernel of M. Throws DegenerateKernel for omega = 0.
SteadyState steady_state_numeric(const PhysParams& p);

/// delta = ((g_u - g_ell) / g_ell) * B_ell. Throws ZeroLande for g_ell = 0.
double delta_from_field(double g_u, double g_ell, double b_ell);

/// Parameters together with the objects every downstream computation needs:
/// the generator, its propagator and the closed-form steady state.
class System {
public:
    explicit System(PhysParams p);

    const PhysParams& params() const { return params_; }
    const CMatrix& liouvillian() const { return liouvillian_; }
    const numerics::Propagator& propagator() const { return propagator_; }
    const SteadyState& steady() const { return steady_; }

private:
    PhysParams params_;
    CMatrix liouvillian_;
    numerics::Propagator propagator_;
    SteadyState steady_;
};

}  // namespace rfbeats
