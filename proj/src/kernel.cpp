#include "fsvm/kernel.hpp"

#include <algorithm>
#include <cmath>

namespace fsvm {

Grid::Grid(std::vector<double> points) : points_(std::move(points)) {
    if (points_.empty()) throw InvalidParameter("grid must contain at least one point");
    double prev = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        double t = points_[i];
        if (!std::isfinite(t))
            throw InvalidParameter("grid point " + std::to_string(i) + " is not finite");
        if (t <= 0.0 || t > 1.0)
            throw InvalidParameter("grid points must lie in (0, 1], got " +
                                   std::to_string(t));
        if (i > 0 && t <= prev)
            throw InvalidParameter("grid points must be strictly increasing");
        prev = t;
    }
}

bool Grid::contains(double t) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), t);
    return it != points_.end() && *it == t;
}

bool Grid::is_subset_of(const Grid& fine) const {
    for (double t : points_)
        if (!fine.contains(t)) return false;
    return true;
}

double green_kernel(const KernelSpec& spec, double s, double t) {
    if (!(s >= 0.0 && s <= 1.0) || !(t >= 0.0 && t <= 1.0))
        throw DomainError("kernel arguments must lie in [0, 1]");
    const double a = std::min(s, t);
    const double b = std::max(s, t);
    if (spec.order() == 1) return a;
    return a * a * (0.5 * b - a / 6.0);
}

}  // namespace fsvm
