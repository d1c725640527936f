#ifndef FSVM_DATAGEN_HPP
#define FSVM_DATAGEN_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "fsvm/lspline.hpp"

namespace fsvm {

/// Two-class generator of random functions in the kernel span:
///   x = sum_a w_a K(u_a, .),  w = y * delta * w0 + sigma * eps,
/// anchors u_a = a/(q+1), base pattern w0 alternating +-1/sqrt(q), eps
/// standard normal truncated to [-6, 6]. Labels flip with probability
/// flip_prob after the clean draw.
struct GeneratorSpec {
    KernelSpec spec;
    int anchor_count = 7;       // q
    double class_separation;    // delta > 0
    double noise_scale;         // sigma >= 0
    double flip_prob;           // rho in [0, 0.5)
    std::uint64_t seed = 0;

    void validate() const;

    /// Interior anchor points a/(q+1), a = 1..q.
    std::vector<double> anchors() const;
    /// Unit pattern (+1, -1, +1, ...)/sqrt(q).
    Eigen::VectorXd base_pattern() const;
};

struct LabeledSample {
    DiscretizedFunction function;
    int label;        // observed, after flip
    int clean_label;  // pre-flip, kept for Bayes-error accounting
};

/// Nested dyadic grids tau_j = {k/2^j : k = 1..2^j}, 1 <= j <= 11.
Grid dyadic_grid(int level);

/// Draws n labeled samples discretized on the grid. Identical spec + grid
/// + n reproduce the identical list. The draw sequence does not depend on
/// the grid, so the same seed yields the same functions on any grid.
std::vector<LabeledSample> generate(const GeneratorSpec& gs, const Grid& grid, int n);

/// Misclassification floor of the generator. sigma = 0 separates the
/// classes exactly, leaving the pure label noise rho. For sigma > 0 the
/// coefficient noise is isotropic, so the optimal rule thresholds w^T w0
/// and the floor is rho + (1-2rho) * Phi(-delta * ||w0|| / sigma).
double bayes_error(const GeneratorSpec& gs);

/// Deterministic shuffled split; both sides nonempty.
std::pair<std::vector<LabeledSample>, std::vector<LabeledSample>> split(
    const std::vector<LabeledSample>& samples, double train_fraction,
    std::uint64_t seed);

}  // namespace fsvm

#endif
