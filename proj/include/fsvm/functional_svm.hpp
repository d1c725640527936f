#ifndef FSVM_FUNCTIONAL_SVM_HPP
#define FSVM_FUNCTIONAL_SVM_HPP

#include <memory>
#include <optional>

#include "fsvm/lspline.hpp"
#include "fsvm/svm.hpp"

namespace fsvm {

struct FunctionalSvmConfig {
    KernelSpec spec;
    Grid grid;
    double gamma;
    double jitter = 0.0;
    std::optional<double> beta;        // schedule exponent, in (0, 1/d)
    std::optional<double> c_override;  // bypasses the schedule entirely

    void validate() const;
};

/// Gaussian kernel in the inverse-Gram metric:
///   exp(-gamma * (x1-x2)^T (K_d + jitter I)^{-1} (x1-x2)).
/// Computed through the Cholesky factor; never materializes K_d^{-1/2}.
double spline_gauss_kernel(const GramFactor& gf, double gamma,
                           const Eigen::VectorXd& x1, const Eigen::VectorXd& x2);

/// The same kernel reached from the function side:
///   exp(-gamma * ||Lh1 - Lh2||^2_L2)
/// expanded as ||h1||^2 - 2<h1,h2> + ||h2||^2 over the spline coefficients.
/// Must agree with spline_gauss_kernel on the source values (jitter 0).
double derivative_gauss_kernel(const LSpline& s1, const LSpline& s2,
                               const GramFactor& gf, double gamma);

/// Regularization schedule C_n = n^(1-beta), beta in (0, 1/d); defaults to
/// the midpoint beta = 1/(2d).
double c_schedule(long n, long d, std::optional<double> beta = std::nullopt);

/// SVM over discretized functions through the spline Gaussian kernel.
class FunctionalSvmModel {
public:
    FunctionalSvmModel(FunctionalSvmConfig config, GramFactor gram, SvmModel core,
                       double c_used);

    const FunctionalSvmConfig& config() const { return config_; }
    const GramFactor& gram() const { return gram_; }
    const SvmModel& core() const { return core_; }
    double c_used() const { return c_used_; }

    /// Kernel row k(sv_k, x) over the support vectors, equal to
    /// spline_gauss_kernel entrywise (batched through cached solves).
    Eigen::VectorXd kernel_row(const Eigen::VectorXd& x) const;

private:
    FunctionalSvmConfig config_;
    GramFactor gram_;
    SvmModel core_;
    double c_used_;
    Eigen::MatrixXd solved_svs_;  // L^{-1} sv_k, one column per support vector
};

struct Prediction {
    int label;
    double score;
};

/// Assembles the n x n spline Gaussian kernel matrix, picks
/// C = c_override or c_schedule(n, d, beta), and solves the dual.
/// `threads` bounds the kernel-assembly parallelism.
FunctionalSvmModel fit(const std::vector<DiscretizedFunction>& samples,
                       const std::vector<int>& labels, const FunctionalSvmConfig& config,
                       int threads = 1);

/// Decision score and sign (ties to +1) for one sample on the model grid.
Prediction predict(const FunctionalSvmModel& model, const DiscretizedFunction& sample);

}  // namespace fsvm

#endif
