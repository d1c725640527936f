#include "fsvm/lspline.hpp"

#include <cmath>

namespace fsvm {

DiscretizedFunction::DiscretizedFunction(Grid grid_, Eigen::VectorXd values_)
    : grid(std::move(grid_)), values(std::move(values_)) {
    if (static_cast<std::size_t>(values.size()) != grid.size())
        throw DimensionError("value count does not match grid size");
    if (!values.allFinite())
        throw InvalidParameter("discretized values must all be finite");
}

LSpline::LSpline(KernelSpec spec, Grid grid, Eigen::VectorXd coefficients,
                 Eigen::VectorXd source_values, double jitter)
    : spec_(spec),
      grid_(std::move(grid)),
      coefficients_(std::move(coefficients)),
      source_values_(std::move(source_values)),
      jitter_(jitter) {
    const auto d = static_cast<Eigen::Index>(grid_.size());
    if (coefficients_.size() != d || source_values_.size() != d)
        throw DimensionError("coefficient/value length does not match grid size");
    if (jitter_ < 0.0) throw InvalidParameter("jitter must be nonnegative");
}

namespace {

void check_match(const LSpline& s, const GramFactor& gf) {
    if (!(s.spec() == gf.spec()) || !(s.grid() == gf.grid()))
        throw DimensionError("spline and Gram factor were built on different grid/spec");
}

}  // namespace

LSpline interpolate(const DiscretizedFunction& df, const KernelSpec& spec,
                    const GramFactor& gf) {
    if (!(gf.spec() == spec) || !(gf.grid() == df.grid))
        throw DimensionError("Gram factor does not match the function's grid/spec");
    if (gf.jitter() != 0.0)
        throw InvalidParameter("interpolation requires a jitter-free Gram factor");
    return LSpline(spec, df.grid, gf.solve(df.values), df.values, 0.0);
}

LSpline smooth(const DiscretizedFunction& df, const KernelSpec& spec, double lambda) {
    if (!(lambda > 0.0)) throw InvalidParameter("smoothing parameter must be positive");
    GramFactor gf = gram_matrix(spec, df.grid, lambda);
    return LSpline(spec, df.grid, gf.solve(df.values), df.values, lambda);
}

double evaluate(const LSpline& s, double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw DomainError("evaluation point must lie in [0, 1]");
    const auto& c = s.coefficients();
    const auto& g = s.grid();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < c.size(); ++i)
        acc += c[i] * green_kernel(s.spec(), g[static_cast<std::size_t>(i)], t);
    return acc;
}

double l_derivative(const LSpline& s, double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw DomainError("evaluation point must lie in [0, 1]");
    const auto& c = s.coefficients();
    const auto& g = s.grid();
    if (s.spec().order() == 1) {
        if (g.contains(t))
            throw AmbiguousAtKnot("first-order L-derivative jumps at knot t = " +
                                  std::to_string(t));
        double acc = 0.0;
        for (Eigen::Index i = 0; i < c.size(); ++i)
            if (t < g[static_cast<std::size_t>(i)]) acc += c[i];
        return acc;
    }
    double acc = 0.0;
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        double r = g[static_cast<std::size_t>(i)] - t;
        if (r > 0.0) acc += c[i] * r;
    }
    return acc;
}

double norm_sq(const LSpline& s, const GramFactor& gf) {
    check_match(s, gf);
    // ||h||^2 = c^T K c; with (K + lambda I) c = x this is c^T x - lambda c^T c.
    return s.coefficients().dot(s.source_values()) -
           s.jitter() * s.coefficients().squaredNorm();
}

double inner_product(const LSpline& s1, const LSpline& s2, const GramFactor& gf) {
    check_match(s1, gf);
    check_match(s2, gf);
    return s1.coefficients().dot(s2.source_values()) -
           s2.jitter() * s1.coefficients().dot(s2.coefficients());
}

double projection_residual_sq(const LSpline& fine, const Grid& coarse_grid,
                              const GramFactor& gf_coarse) {
    if (!coarse_grid.is_subset_of(fine.grid()))
        throw GridNestingError("coarse grid is not a subset of the fine grid");
    if (!(gf_coarse.grid() == coarse_grid) || !(gf_coarse.spec() == fine.spec()))
        throw DimensionError("coarse Gram factor does not match the coarse grid/spec");

    Eigen::VectorXd coarse_values(coarse_grid.size());
    for (std::size_t k = 0; k < coarse_grid.size(); ++k)
        coarse_values[static_cast<Eigen::Index>(k)] = evaluate(fine, coarse_grid[k]);

    LSpline projected = interpolate(
        DiscretizedFunction(coarse_grid, std::move(coarse_values)), fine.spec(),
        gf_coarse);

    double fine_nsq = fine.coefficients().dot(fine.source_values()) -
                      fine.jitter() * fine.coefficients().squaredNorm();
    double proj_nsq = projected.coefficients().dot(projected.source_values());
    return fine_nsq - proj_nsq;
}

}  // namespace fsvm
