#ifndef FSVM_KERNEL_HPP
#define FSVM_KERNEL_HPP

#include <vector>

#include "fsvm/errors.hpp"

namespace fsvm {

/// Order of the differential operator L = D^m on [0,1]. The induced
/// reproducing kernel (with left-endpoint boundary conditions
/// h(0) = ... = h^(m-1)(0) = 0) has the closed forms
///   m = 1:  K(s,t) = min(s,t)
///   m = 2:  K(s,t) = a^2 b / 2 - a^3 / 6,  a = min(s,t), b = max(s,t).
class KernelSpec {
public:
    explicit KernelSpec(int order) : order_(order) {
        if (order != 1 && order != 2)
            throw UnsupportedOperator("operator order must be 1 or 2, got " +
                                      std::to_string(order));
    }

    int order() const { return order_; }

    friend bool operator==(const KernelSpec& a, const KernelSpec& b) {
        return a.order_ == b.order_;
    }

private:
    int order_;
};

/// Strictly increasing discretization points in (0, 1]. Zero is excluded:
/// the boundary conditions force K(0,.) = 0, which would make any Gram
/// matrix containing it singular.
class Grid {
public:
    explicit Grid(std::vector<double> points);

    std::size_t size() const { return points_.size(); }
    double operator[](std::size_t i) const { return points_[i]; }
    const std::vector<double>& points() const { return points_; }

    /// Exact membership test (grids built from dyadic rationals compare
    /// bit-for-bit).
    bool contains(double t) const;
    bool is_subset_of(const Grid& fine) const;

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.points_ == b.points_;
    }

private:
    std::vector<double> points_;
};

/// Reproducing kernel K(s,t) of the derivative-penalty inner product for
/// L = D^m. Symmetric; K(0,.) = 0.
double green_kernel(const KernelSpec& spec, double s, double t);

}  // namespace fsvm

#endif
