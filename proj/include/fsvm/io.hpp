#ifndef FSVM_IO_HPP
#define FSVM_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fsvm/datagen.hpp"
#include "fsvm/functional_svm.hpp"

namespace fsvm {

/// Labeled dataset as it travels in CSV files: the grid rides in a
/// comment-prefixed header `#grid,t1,...,td`, each row is
/// `label,v1,...,vd` with 17-significant-digit values.
struct Dataset {
    Grid grid;
    std::vector<Eigen::VectorXd> values;
    std::vector<int> labels;

    std::size_t size() const { return values.size(); }
    std::vector<DiscretizedFunction> functions() const;
};

std::string format_double(double v);  // up to 17 significant digits, round-trips

void write_dataset(std::ostream& out, const Dataset& ds);
void write_dataset_file(const std::string& path, const Dataset& ds);
Dataset read_dataset(std::istream& in);
Dataset read_dataset_file(const std::string& path);

/// Model persistence: single JSON document, format_version 1, keys
/// {order, grid, gamma, jitter, beta, C_used, support_vectors, dual_coefs,
/// bias, format_version}.
std::string model_to_json(const FunctionalSvmModel& model);
FunctionalSvmModel model_from_json(const std::string& text);
void save_model(const std::string& path, const FunctionalSvmModel& model);
FunctionalSvmModel load_model(const std::string& path);

/// Experiment configuration, parsed from JSON with identical field names.
struct ExperimentConfig {
    GeneratorSpec generator;
    std::vector<int> grid_levels;
    std::vector<int> sample_sizes;
    std::vector<double> gammas;  // accepts a scalar or a list under "gamma"
    std::optional<double> beta;
    std::optional<double> c_override;
    int replicates = 1;
    int test_size = 2000;
    double jitter = 0.0;
    std::uint64_t seed = 0;
    std::string output_dir = ".";

    void validate() const;
};

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

}  // namespace fsvm

#endif
