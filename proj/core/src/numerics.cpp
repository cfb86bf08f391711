#include "rfbeats/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "rfbeats/errors.hpp"

namespace rfbeats::numerics {

namespace {

void require_square(const CMatrix& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw DimensionMismatch(std::string(what) + ": matrix must be square and non-empty, got " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

void require_length(Index dim, const CVector& v, const char* what) {
    if (v.size() != dim) {
        throw DimensionMismatch(std::string(what) + ": vector length " + std::to_string(v.size()) +
                                " does not match dimension " + std::to_string(dim));
    }
}

double one_norm(const CMatrix& m) {
    return m.cwiseAbs().colwise().sum().maxCoeff();
}

}  // namespace

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n < 2) throw DimensionMismatch("linspace: need at least 2 points");
    std::vector<double> out(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t k = 0; k < n; ++k) out[k] = lo + step * static_cast<double>(k);
    out.back() = hi;
    return out;
}

double max_abs(const CMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

EigDecomposition EigDecomposition::compute(const CMatrix& m, double condition_cap) {
    require_square(m, "eig_decompose");
    const Index n = m.rows();

    Eigen::ComplexEigenSolver<CMatrix> solver(m, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success) {
        throw DefectiveMatrix("eig_decompose: eigenvalue iteration did not converge");
    }

    const double scale = max_abs(m);
    const double imag_floor = 1e-10 * std::max(scale, 1.0);
    auto key_imag = [&](const cplx& z) { return std::abs(z.imag()) < imag_floor ? 0.0 : z.imag(); };

    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    const CVector& raw = solver.eigenvalues();
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
        const double ia = key_imag(raw(a));
        const double ib = key_imag(raw(b));
        if (ia != ib) return ia < ib;
        return raw(a).real() < raw(b).real();
    });

    EigDecomposition d;
    d.eigenvalues_.resize(n);
    d.right_.resize(n, n);
    for (Index k = 0; k < n; ++k) {
        d.eigenvalues_(k) = raw(order[static_cast<std::size_t>(k)]);
        d.right_.col(k) = solver.eigenvectors().col(order[static_cast<std::size_t>(k)]);
    }

    Eigen::FullPivLU<CMatrix> lu(d.right_);
    if (!lu.isInvertible()) {
        throw DefectiveMatrix("eig_decompose: eigenvector matrix is singular");
    }
    d.inverse_ = lu.inverse();
    d.condition_ = one_norm(d.right_) * one_norm(d.inverse_);
    if (!std::isfinite(d.condition_) || d.condition_ > condition_cap) {
        throw DefectiveMatrix("eig_decompose: eigenvector condition estimate " +
                              std::to_string(d.condition_) + " exceeds cap " +
                              std::to_string(condition_cap));
    }

    const double err = max_abs(d.reconstruct() - m);
    if (err > 1e-10 * std::max(scale, std::numeric_limits<double>::min())) {
        throw DefectiveMatrix("eig_decompose: reconstruction error " + std::to_string(err) +
                              " too large");
    }
    return d;
}

CMatrix EigDecomposition::reconstruct() const {
    return right_ * eigenvalues_.asDiagonal() * inverse_;
}

CVector EigDecomposition::coordinates(const CVector& v) const {
    require_length(dim(), v, "EigDecomposition::coordinates");
    return inverse_ * v;
}

EigDecomposition eig_decompose(const CMatrix& m, double condition_cap) {
    return EigDecomposition::compute(m, condition_cap);
}

Propagator::Propagator(CMatrix m, double condition_cap) : matrix_(std::move(m)) {
    require_square(matrix_, "Propagator");
    try {
        decomposition_ = EigDecomposition::compute(matrix_, condition_cap);
    } catch (const DefectiveMatrix&) {
        decomposition_.reset();
    }
}

CVector Propagator::apply(double t, const CVector& v) const {
    require_length(dim(), v, "Propagator::apply");
    if (decomposition_) return mat_exp_action(*decomposition_, t, v);
    return mat_exp_action_dense(matrix_, t, v);
}

std::vector<CVector> Propagator::apply(std::span<const double> times, const CVector& v) const {
    require_length(dim(), v, "Propagator::apply");
    std::vector<CVector> out;
    out.reserve(times.size());
    if (decomposition_) {
        const CVector c = decomposition_->coordinates(v);
        const CVector& lambda = decomposition_->eigenvalues();
        for (double t : times) {
            const CVector weighted = ((lambda * t).array().exp() * c.array()).matrix();
            out.push_back(decomposition_->right_vectors() * weighted);
        }
    } else {
        for (double t : times) out.push_back(mat_exp_action_dense(matrix_, t, v));
    }
    return out;
}

CVector mat_exp_action(const Propagator& propagator, double t, const CVector& v) {
    return propagator.apply(t, v);
}

CVector mat_exp_action(const EigDecomposition& decomposition, double t, const CVector& v) {
    const CVector c = decomposition.coordinates(v);
    const CVector weighted = ((decomposition.eigenvalues() * t).array().exp() * c.array()).matrix();
    return decomposition.right_vectors() * weighted;
}

CVector mat_exp_action(const CMatrix& m, double t, const CVector& v) {
    return Propagator(m).apply(t, v);
}

CVector mat_exp_action_dense(const CMatrix& m, double t, const CVector& v) {
    require_square(m, "mat_exp_action_dense");
    require_length(m.rows(), v, "mat_exp_action_dense");
    const CMatrix scaled = m * t;
    const CMatrix e = scaled.exp();
    return e * v;
}

CVector resolvent_solve(const CMatrix& m, double omega, const CVector& v) {
    require_square(m, "resolvent_solve");
    require_length(m.rows(), v, "resolvent_solve");
    const Index n = m.rows();
    const CMatrix a = cplx(0.0, omega) * CMatrix::Identity(n, n) - m;
    Eigen::FullPivLU<CMatrix> lu(a);
    if (!lu.isInvertible() || lu.rcond() < 1e-12) {
        throw SingularResolvent("resolvent_solve: i*omega is an eigenvalue of M at omega = " +
                                std::to_string(omega));
    }
    return lu.solve(v);
}

CVector resolvent_eigen(const EigDecomposition& decomposition, double omega, const CVector& v) {
    const CVector c = decomposition.coordinates(v);
    const CVector& lambda = decomposition.eigenvalues();
    const double c_scale = std::max(c.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
    CVector weighted(c.size());
    for (Index k = 0; k < c.size(); ++k) {
        const cplx denom = cplx(0.0, omega) - lambda(k);
        if (std::abs(c(k)) <= 1e-14 * c_scale) {
            weighted(k) = 0.0;
            continue;
        }
        if (std::abs(denom) < 1e-12 * std::max(1.0, std::abs(lambda(k)))) {
            throw SingularResolvent("resolvent_eigen: vector has a component along the mode at " +
                                    std::to_string(lambda(k).real()) + "+" +
                                    std::to_string(lambda(k).imag()) + "i");
        }
        weighted(k) = c(k) / denom;
    }
    return decomposition.right_vectors() * weighted;
}

DeflatedResolvent::DeflatedResolvent(CMatrix m, CVector zero_right, CVector zero_left)
    : matrix_(std::move(m)), right_(std::move(zero_right)), left_(std::move(zero_left)) {
    require_square(matrix_, "DeflatedResolvent");
    require_length(matrix_.rows(), right_, "DeflatedResolvent");
    require_length(matrix_.rows(), left_, "DeflatedResolvent");
    const cplx overlap = left_.transpose() * right_;
    if (std::abs(overlap) < 1e-12) {
        throw DegenerateKernel("DeflatedResolvent: zero-mode left/right vectors are orthogonal");
    }
    right_ /= overlap;
    projector_ = right_ * left_.transpose();
}

CVector DeflatedResolvent::solve(double omega, const CVector& v) const {
    require_length(matrix_.rows(), v, "DeflatedResolvent::solve");
    return solve(omega, CMatrix(v)).col(0);
}

CMatrix DeflatedResolvent::solve(double omega, const CMatrix& vs) const {
    const Index n = matrix_.rows();
    if (vs.rows() != n) {
        throw DimensionMismatch("DeflatedResolvent::solve: right-hand side has wrong row count");
    }
    const CMatrix a = cplx(0.0, omega) * CMatrix::Identity(n, n) - matrix_ + projector_;
    Eigen::PartialPivLU<CMatrix> lu(a);
    return lu.solve(vs);
}

Index zero_eigenvalue_count(const CMatrix& m, double rel_tol) {
    require_square(m, "zero_eigenvalue_count");
    Eigen::ComplexEigenSolver<CMatrix> solver(m, /*computeEigenvectors=*/false);
    const double tol = rel_tol * max_abs(m);
    Index count = 0;
    for (Index k = 0; k < solver.eigenvalues().size(); ++k) {
        if (std::abs(solver.eigenvalues()(k)) <= tol) ++count;
    }
    return count;
}

CVector null_vector(const CMatrix& m, std::span<const Index> normalize_slots) {
    require_square(m, "null_vector");
    const Index n = m.rows();
    const Index zeros = zero_eigenvalue_count(m);
    if (zeros != 1) {
        throw DegenerateKernel("null_vector: expected a simple zero eigenvalue, found " +
                               std::to_string(zeros));
    }
    if (normalize_slots.empty()) {
        throw DimensionMismatch("null_vector: no normalization slots given");
    }

    CMatrix augmented = CMatrix::Zero(n + 1, n);
    augmented.topRows(n) = m;
    for (Index slot : normalize_slots) {
        if (slot < 0 || slot >= n) throw DimensionMismatch("null_vector: slot out of range");
        augmented(n, slot) = 1.0;
    }
    CVector rhs = CVector::Zero(n + 1);
    rhs(n) = 1.0;
    CVector x = augmented.colPivHouseholderQr().solve(rhs);

    // One refinement sweep keeps the kernel residual at roundoff.
    const CVector r = rhs - augmented * x;
    x += augmented.colPivHouseholderQr().solve(r);
    return x;
}

}  // namespace rfbeats::numerics
