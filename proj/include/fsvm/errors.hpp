#ifndef FSVM_ERRORS_HPP
#define FSVM_ERRORS_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace fsvm {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Differential-operator order outside the supported set {1, 2}.
class UnsupportedOperator : public Error {
public:
    using Error::Error;
};

/// Vector/matrix sizes do not agree, or a spline and Gram factor were
/// built on different grids.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Evaluation point outside [0, 1].
class DomainError : public Error {
public:
    using Error::Error;
};

/// Parameter outside its admissible range.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// First-order L-derivative requested exactly at a knot, where it jumps.
class AmbiguousAtKnot : public Error {
public:
    using Error::Error;
};

/// Coarse grid is not a subset of the fine grid.
class GridNestingError : public Error {
public:
    using Error::Error;
};

/// Sample grid differs from the grid a model or config was built on.
class GridMismatch : public Error {
public:
    using Error::Error;
};

/// Cholesky factorization hit a pivot at or below tolerance. Carries the
/// failing pivot index and, when one exists, the smallest power-of-ten
/// jitter (probed up to 1e-2) that makes the factorization succeed.
class IllConditionedGram : public Error {
public:
    IllConditionedGram(const std::string& what, int pivot_index,
                       std::optional<double> suggested_jitter)
        : Error(what), pivot_index_(pivot_index), suggested_jitter_(suggested_jitter) {}

    int pivot_index() const { return pivot_index_; }
    std::optional<double> suggested_jitter() const { return suggested_jitter_; }

private:
    int pivot_index_;
    std::optional<double> suggested_jitter_;
};

/// Training labels contain only one class.
class DegenerateLabels : public Error {
public:
    using Error::Error;
};

/// Kernel matrix is not symmetric (or otherwise unusable).
class InvalidKernelMatrix : public Error {
public:
    using Error::Error;
};

/// SMO exhausted its sweep budget before reaching the KKT tolerance.
/// Carries the worst KKT violation at the point of giving up.
class ConvergenceFailure : public Error {
public:
    ConvergenceFailure(const std::string& what, double worst_violation)
        : Error(what), worst_violation_(worst_violation) {}

    double worst_violation() const { return worst_violation_; }

private:
    double worst_violation_;
};

/// File could not be opened, read, or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Config or data file parsed but failed validation.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace fsvm

#endif
