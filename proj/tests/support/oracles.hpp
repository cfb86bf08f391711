#pragma once

// Independent reference evaluations used only by tests.

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace rfbeats::testing {

using cplx = std::complex<double>;

/// Classical 4th-order Runge-Kutta for dv/dt = M v, fixed step h.
Eigen::VectorXcd rk4_propagate(const Eigen::MatrixXcd& m, Eigen::VectorXcd v, double t,
                               double h = 1e-4);

/// RK4 states at each of the (ascending) sample times.
std::vector<Eigen::VectorXcd> rk4_series(const Eigen::MatrixXcd& m, const Eigen::VectorXcd& v,
                                         const std::vector<double>& times, double h = 1e-4);

/// int_0^T e^{-i omega tau} g(tau) dtau for samples g_k = g(k dt), k < n,
/// evaluated at omega_j = 2 pi j / (n_fft dt) with FFTW. Trapezoid rule with
/// the first Euler-Maclaurin endpoint correction; `dg0` is g'(0) and g is
/// assumed negligible at T.
struct TransformSamples {
    std::vector<double> omegas;
    std::vector<cplx> values;
};
TransformSamples one_sided_transform_fft(const std::vector<cplx>& g, double dt, cplx dg0,
                                         std::size_t n_fft);

/// Composite Simpson rule on [a, b] with an even number of intervals.
double simpson(const std::function<double(double)>& f, double a, double b, int intervals);

}  // namespace rfbeats::testing
