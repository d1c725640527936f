#include "fsvm/gram.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <string>

namespace fsvm {

namespace {

// Lower-triangular Cholesky of A with per-pivot inspection. On success the
// Schur-complement pivots (squared L diagonal) land in `pivots`; on failure
// returns the offending pivot index, -1 otherwise.
int cholesky_ll(const Eigen::MatrixXd& A, double pivot_tolerance, Eigen::MatrixXd& L,
                Eigen::VectorXd& pivots) {
    const Eigen::Index d = A.rows();
    L = Eigen::MatrixXd::Zero(d, d);
    pivots.resize(d);
    for (Eigen::Index j = 0; j < d; ++j) {
        double pivot = A(j, j) - L.row(j).head(j).squaredNorm();
        if (!(pivot > pivot_tolerance)) return static_cast<int>(j);
        pivots[j] = pivot;
        const double ljj = std::sqrt(pivot);
        L(j, j) = ljj;
        for (Eigen::Index i = j + 1; i < d; ++i)
            L(i, j) = (A(i, j) - L.row(i).head(j).dot(L.row(j).head(j))) / ljj;
    }
    return -1;
}

Eigen::MatrixXd assemble(const KernelSpec& spec, const Grid& grid) {
    const Eigen::Index d = static_cast<Eigen::Index>(grid.size());
    Eigen::MatrixXd K(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            double v = green_kernel(spec, grid[i], grid[j]);
            K(i, j) = v;
            K(j, i) = v;
        }
    }
    return K;
}

}  // namespace

GramFactor gram_matrix(const KernelSpec& spec, const Grid& grid, double jitter) {
    if (!(jitter >= 0.0)) throw InvalidParameter("jitter must be nonnegative");
    const Eigen::Index d = static_cast<Eigen::Index>(grid.size());

    Eigen::MatrixXd K = assemble(spec, grid);
    Eigen::MatrixXd A = K;
    A.diagonal().array() += jitter;

    const double max_diag = A.diagonal().maxCoeff();
    const double pivot_tolerance = 1e-12 * max_diag;

    Eigen::MatrixXd L;
    Eigen::VectorXd pivots;
    int failed = cholesky_ll(A, pivot_tolerance, L, pivots);
    if (failed >= 0) {
        // Probe for the smallest power-of-ten jitter that factors cleanly.
        std::optional<double> suggestion;
        for (int e = -16; e <= -2; ++e) {
            double probe = std::pow(10.0, e);
            Eigen::MatrixXd Ap = K;
            Ap.diagonal().array() += probe;
            Eigen::MatrixXd Lp;
            Eigen::VectorXd pp;
            if (cholesky_ll(Ap, 1e-12 * Ap.diagonal().maxCoeff(), Lp, pp) < 0) {
                suggestion = probe;
                break;
            }
        }
        std::string msg = "Gram matrix is ill-conditioned: pivot " +
                          std::to_string(failed) + " fell below tolerance";
        if (suggestion)
            msg += "; smallest working jitter is " + std::to_string(*suggestion);
        throw IllConditionedGram(msg, failed, suggestion);
    }

    double condition;
    if (d <= 64) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A, Eigen::EigenvaluesOnly);
        const auto& ev = es.eigenvalues();
        double lo = std::max(ev(0), std::numeric_limits<double>::min());
        condition = ev(d - 1) / lo;
    } else {
        condition = pivots.maxCoeff() / pivots.minCoeff();
    }

    return GramFactor(spec, grid, std::move(K), jitter, std::move(L), condition);
}

Eigen::VectorXd GramFactor::solve(const Eigen::VectorXd& b) const {
    if (b.size() != factor_.rows())
        throw DimensionError("right-hand side length does not match Gram dimension");
    auto lower = factor_.triangularView<Eigen::Lower>();
    auto upper = factor_.transpose().triangularView<Eigen::Upper>();
    Eigen::VectorXd x = upper.solve(lower.solve(b));
    // One refinement step keeps the knot residual near machine precision
    // even when the Gram matrix is badly conditioned.
    Eigen::VectorXd r = b - matrix_ * x - jitter_ * x;
    x += upper.solve(lower.solve(r));
    return x;
}

double quad_form_inverse(const GramFactor& gf, const Eigen::VectorXd& u,
                         const Eigen::VectorXd& v) {
    const Eigen::Index d = gf.factor().rows();
    if (u.size() != d || v.size() != d)
        throw DimensionError("vector length does not match Gram dimension");
    auto lower = gf.factor().triangularView<Eigen::Lower>();
    Eigen::VectorXd zu = lower.solve(u);
    if (&u == &v) return zu.squaredNorm();
    Eigen::VectorXd zv = lower.solve(v);
    return zu.dot(zv);
}

Eigen::VectorXd whiten(const GramFactor& gf, const Eigen::VectorXd& u) {
    const Eigen::Index d = gf.factor().rows();
    if (u.size() != d)
        throw DimensionError("vector length does not match Gram dimension");
    if (d > 2048) throw InvalidParameter("whiten supports d <= 2048");
    Eigen::MatrixXd A = gf.matrix();
    A.diagonal().array() += gf.jitter();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    Eigen::VectorXd inv_sqrt =
        es.eigenvalues().cwiseMax(std::numeric_limits<double>::min()).cwiseSqrt().cwiseInverse();
    return es.eigenvectors() *
           (inv_sqrt.asDiagonal() * (es.eigenvectors().transpose() * u));
}

}  // namespace fsvm
