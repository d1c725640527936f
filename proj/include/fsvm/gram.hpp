#ifndef FSVM_GRAM_HPP
#define FSVM_GRAM_HPP

#include <Eigen/Dense>

#include "fsvm/kernel.hpp"

namespace fsvm {

/// Gram matrix K_d of kernel evaluations on a grid together with the
/// Cholesky factor of K_d + jitter*I. Immutable once built; every
/// quadratic-form service in the library goes through this factor.
class GramFactor {
public:
    const KernelSpec& spec() const { return spec_; }
    const Grid& grid() const { return grid_; }
    const Eigen::MatrixXd& matrix() const { return matrix_; }
    double jitter() const { return jitter_; }
    const Eigen::MatrixXd& factor() const { return factor_; }
    double condition_estimate() const { return condition_estimate_; }
    std::size_t dim() const { return grid_.size(); }

    /// Solves (K_d + jitter*I) x = b through the Cholesky factor, with one
    /// step of iterative refinement.
    Eigen::VectorXd solve(const Eigen::VectorXd& b) const;

private:
    friend GramFactor gram_matrix(const KernelSpec&, const Grid&, double);

    GramFactor(KernelSpec spec, Grid grid, Eigen::MatrixXd matrix, double jitter,
               Eigen::MatrixXd factor, double condition_estimate)
        : spec_(spec),
          grid_(std::move(grid)),
          matrix_(std::move(matrix)),
          jitter_(jitter),
          factor_(std::move(factor)),
          condition_estimate_(condition_estimate) {}

    KernelSpec spec_;
    Grid grid_;
    Eigen::MatrixXd matrix_;
    double jitter_;
    Eigen::MatrixXd factor_;
    double condition_estimate_;
};

/// Assembles K_d on the grid, adds jitter*I and factors it. A Cholesky
/// pivot at or below 1e-12 * max(diag) raises IllConditionedGram carrying
/// the pivot index and the smallest power-of-ten jitter that succeeds.
/// The condition estimate is the exact eigenvalue ratio for d <= 64 and
/// the squared extreme-pivot ratio otherwise.
GramFactor gram_matrix(const KernelSpec& spec, const Grid& grid, double jitter);

/// u^T (K_d + jitter*I)^{-1} v via two triangular solves.
double quad_form_inverse(const GramFactor& gf, const Eigen::VectorXd& u,
                         const Eigen::VectorXd& v);

/// (K_d + jitter*I)^{-1/2} u via symmetric eigendecomposition (d <= 2048).
/// Cross-validation path only: ||whiten(u)||^2 == quad_form_inverse(u,u).
Eigen::VectorXd whiten(const GramFactor& gf, const Eigen::VectorXd& u);

}  // namespace fsvm

#endif
