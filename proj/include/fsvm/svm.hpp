#ifndef FSVM_SVM_HPP
#define FSVM_SVM_HPP

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "fsvm/errors.hpp"

namespace fsvm {

struct SvmParams {
    double c_bound;               // box constraint C
    double gamma;                 // Gaussian width, carried for the kernel layer
    double kkt_tolerance = 1e-6;
    long max_passes = 0;          // sweeps without progress before giving up; 0 -> 10*n

    void validate() const;
};

struct DualSolution {
    Eigen::VectorXd alphas;
    double bias = 0.0;
    double dual_objective = 0.0;
};

/// Observer invoked with the multipliers after every SMO pair update.
/// Test hook for the monotone-ascent property; null in production use.
using SmoObserver = std::function<void(const Eigen::VectorXd& alphas)>;

/// Solves the soft-margin SVM dual
///   max_a sum_i a_i - 1/2 sum_ij a_i a_j y_i y_j K_ij
///   s.t. sum_i a_i y_i = 0, 0 <= a_i <= C
/// by SMO with maximal-violator pair selection (second index maximizing
/// |E_i - E_j|), alternating full passes with passes restricted to free
/// multipliers. Converges when the KKT gap falls below kkt_tolerance.
DualSolution solve_dual(const Eigen::MatrixXd& kernel_matrix,
                        const std::vector<int>& labels, const SvmParams& params,
                        const SmoObserver& observer = nullptr);

/// Trained model: support vectors with their signed multipliers a_i * y_i.
struct SvmModel {
    std::vector<Eigen::VectorXd> support_vectors;
    std::vector<double> dual_coefs;  // alpha_i * y_i
    double bias = 0.0;
    SvmParams params;
    std::string kernel_id;
};

/// f(x) = sum_k dual_coefs[k] * kernel_row[k] + bias.
double decision_function(const SvmModel& model, const Eigen::VectorXd& kernel_row);

/// Sign rule with ties resolved to +1.
inline int classify(double score) { return score >= 0.0 ? +1 : -1; }

/// Worst KKT violation over all samples at the given multipliers and bias:
///   a_i = 0:     max(0, 1 - y_i f(x_i))
///   a_i = C:     max(0, y_i f(x_i) - 1)
///   0 < a_i < C: |y_i f(x_i) - 1|
double kkt_report(const Eigen::MatrixXd& kernel_matrix, const std::vector<int>& labels,
                  const Eigen::VectorXd& alphas, double bias, const SvmParams& params);

}  // namespace fsvm

#endif
