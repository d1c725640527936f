#ifndef FSVM_LSPLINE_HPP
#define FSVM_LSPLINE_HPP

#include <Eigen/Dense>

#include "fsvm/gram.hpp"

namespace fsvm {

/// A function known only through its values on a grid.
struct DiscretizedFunction {
    DiscretizedFunction(Grid grid_, Eigen::VectorXd values_);

    Grid grid;
    Eigen::VectorXd values;
};

/// Minimal-norm interpolant h = sum_i c_i K(t_i, .) of a discretized
/// function, with (K_d + jitter*I) c = values. jitter = 0 interpolates
/// exactly; jitter > 0 gives the smoothing-spline solution.
class LSpline {
public:
    LSpline(KernelSpec spec, Grid grid, Eigen::VectorXd coefficients,
            Eigen::VectorXd source_values, double jitter);

    const KernelSpec& spec() const { return spec_; }
    const Grid& grid() const { return grid_; }
    const Eigen::VectorXd& coefficients() const { return coefficients_; }
    const Eigen::VectorXd& source_values() const { return source_values_; }
    double jitter() const { return jitter_; }

private:
    KernelSpec spec_;
    Grid grid_;
    Eigen::VectorXd coefficients_;
    Eigen::VectorXd source_values_;
    double jitter_;
};

/// Exact interpolation: c = K_d^{-1} x. Requires gf built on df.grid with
/// jitter 0.
LSpline interpolate(const DiscretizedFunction& df, const KernelSpec& spec,
                    const GramFactor& gf);

/// Smoothing spline: c = (K_d + lambda I)^{-1} x, lambda > 0.
LSpline smooth(const DiscretizedFunction& df, const KernelSpec& spec, double lambda);

/// h(t) = sum_i c_i K(t_i, t), t in [0, 1].
double evaluate(const LSpline& s, double t);

/// Lh(t): piecewise constant sum_i c_i 1{t < t_i} for m = 1 (jumps at the
/// knots, so t must not be a knot); piecewise linear sum_i c_i (t_i - t)+
/// for m = 2.
double l_derivative(const LSpline& s, double t);

/// ||h||^2 = c^T K_d c = integral of (Lh)^2 over [0,1].
double norm_sq(const LSpline& s, const GramFactor& gf);

/// <h1, h2> = c_1^T K_d c_2 = integral of Lh1 * Lh2.
double inner_product(const LSpline& s1, const LSpline& s2, const GramFactor& gf);

/// Squared distance from the fine spline to its orthogonal projection onto
/// the coarse kernel span, by the Pythagorean identity
/// ||x||^2 - ||Px||^2. The coarse grid must be a subset of the fine one.
double projection_residual_sq(const LSpline& fine, const Grid& coarse_grid,
                              const GramFactor& gf_coarse);

}  // namespace fsvm

#endif
