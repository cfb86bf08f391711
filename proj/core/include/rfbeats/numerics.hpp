#pragma once

// Dense complex linear algebra for the small (8x8) generators used throughout
// the library: eigendecomposition, propagation, resolvents and kernels.

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace rfbeats::numerics {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr double kDefaultConditionCap = 1e12;

/// n evenly spaced points from lo to hi inclusive (n >= 2).
std::vector<double> linspace(double lo, double hi, std::size_t n);

/// Largest absolute entry of a matrix.
double max_abs(const CMatrix& m);

/// M = V diag(lambda) V^-1, eigenvalues sorted by (imag, real) ascending.
///
/// Imaginary parts below a noise floor of 1e-10 * max|M| are treated as zero
/// for ordering only; stored eigenvalues are left untouched.
class EigDecomposition {
public:
    /// Throws DefectiveMatrix when cond(V) exceeds `condition_cap` or when
    /// the reconstruction error exceeds 1e-10 * max|M|.
    static EigDecomposition compute(const CMatrix& m,
                                    double condition_cap = kDefaultConditionCap);

    const CVector& eigenvalues() const { return eigenvalues_; }
    const CMatrix& right_vectors() const { return right_; }
    const CMatrix& inverse_vectors() const { return inverse_; }
    double condition_estimate() const { return condition_; }
    Index dim() const { return eigenvalues_.size(); }

    CMatrix reconstruct() const;

    /// Coordinates of `v` in the eigenbasis, V^-1 v.
    CVector coordinates(const CVector& v) const;

private:
    EigDecomposition() = default;

    CVector eigenvalues_;
    CMatrix right_;
    CMatrix inverse_;
    double condition_ = 0.0;
};

EigDecomposition eig_decompose(const CMatrix& m,
                               double condition_cap = kDefaultConditionCap);

/// e^{Mt} acting on vectors. Uses the eigenbasis when M is well conditioned,
/// otherwise scaling-and-squaring on the matrix itself.
class Propagator {
public:
    explicit Propagator(CMatrix m, double condition_cap = kDefaultConditionCap);

    CVector apply(double t, const CVector& v) const;
    std::vector<CVector> apply(std::span<const double> times, const CVector& v) const;

    bool uses_eigenbasis() const { return decomposition_.has_value(); }
    const CMatrix& matrix() const { return matrix_; }
    const std::optional<EigDecomposition>& decomposition() const { return decomposition_; }
    Index dim() const { return matrix_.rows(); }

private:
    CMatrix matrix_;
    std::optional<EigDecomposition> decomposition_;
};

CVector mat_exp_action(const Propagator& propagator, double t, const CVector& v);
CVector mat_exp_action(const EigDecomposition& decomposition, double t, const CVector& v);
CVector mat_exp_action(const CMatrix& m, double t, const CVector& v);

/// Scaling-and-squaring path, exposed so callers and tests can force it.
CVector mat_exp_action_dense(const CMatrix& m, double t, const CVector& v);

/// (i omega 1 - M)^-1 v by a pivoted LU solve.
/// Throws SingularResolvent when i omega is numerically an eigenvalue of M.
CVector resolvent_solve(const CMatrix& m, double omega, const CVector& v);

/// Same resolvent evaluated as a sum over eigenmodes.
CVector resolvent_eigen(const EigDecomposition& decomposition, double omega,
                        const CVector& v);

/// Resolvent on the complement of a simple zero mode.
///
/// Solves (i omega 1 - M + r l^T) x = v where M r = 0, l^T M = 0 and
/// l^T r = 1. For l^T v = 0 this equals the resolvent restricted to the
/// decaying modes and stays regular at omega = 0.
class DeflatedResolvent {
public:
    DeflatedResolvent(CMatrix m, CVector zero_right, CVector zero_left);

    CVector solve(double omega, const CVector& v) const;
    CMatrix solve(double omega, const CMatrix& vs) const;

    const CVector& zero_right() const { return right_; }
    const CVector& zero_left() const { return left_; }

private:
    CMatrix matrix_;
    CVector right_;
    CVector left_;
    CMatrix projector_;
};

/// Kernel vector of `m`, normalized so the entries at `normalize_slots` sum
/// to one. Throws DegenerateKernel unless exactly one eigenvalue satisfies
/// |lambda| < 1e-9 * max|M|.
CVector null_vector(const CMatrix& m, std::span<const Index> normalize_slots);

/// Number of eigenvalues with |lambda| < rel_tol * max|M|.
Index zero_eigenvalue_count(const CMatrix& m, double rel_tol = 1e-9);

}  // namespace rfbeats::numerics
