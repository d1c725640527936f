#ifndef FSVM_EXPERIMENT_HPP
#define FSVM_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>

#include "fsvm/io.hpp"

namespace fsvm {

struct ExperimentRow {
    int d = 0;
    int n = 0;
    double gamma = 0.0;
    int replicate = 0;
    double train_error = 0.0;
    double test_error = 0.0;
    double bayes = 0.0;
    double c_used = 0.0;
    bool converged = true;
    std::int64_t wall_time_ms = 0;
};

struct ExperimentOptions {
    int jobs = 1;
    bool deterministic_timing = false;  // report wall_time_ms as 0 for byte-stable output
};

/// Runs the (grid level, n, gamma, replicate) sweep. Cells are independent
/// and execute on up to `jobs` threads; rows come back sorted by
/// (d, n, gamma, replicate) regardless of scheduling. Train sets are drawn
/// per cell (prefix-nested across n), the test set is shared per replicate.
/// Unconverged cells carry converged = false and NaN errors.
std::vector<ExperimentRow> run_consistency(const ExperimentConfig& config,
                                           const ExperimentOptions& options = {});

/// Deterministic seed stream derivation (splitmix64 chaining).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag);

void write_results_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

/// Convergence chart: mean test error vs n (log axis, ticks at powers of
/// ten), one polyline per (d, gamma), dashed reference line at the Bayes
/// error. Pure string emission, deterministic.
std::string render_convergence_svg(const std::vector<ExperimentRow>& rows,
                                   double bayes);

/// Mean +- std per (d, n, gamma) cell over converged replicates.
void print_summary_table(std::ostream& out, const std::vector<ExperimentRow>& rows);

/// Fraction of rows with converged = false.
double failure_fraction(const std::vector<ExperimentRow>& rows);

}  // namespace fsvm

#endif
