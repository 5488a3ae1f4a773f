#include "pilotwave/grid.hpp"

#include <cmath>
#include <numbers>

#include "pilotwave/errors.hpp"

namespace pilotwave {

namespace {
bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
} // namespace

SpatialGrid::SpatialGrid(double x_min, double x_max, std::size_t n_points)
    : x_min_(x_min), x_max_(x_max), n_(n_points) {
    if (!(x_max > x_min))
        throw InvalidGridError("SpatialGrid: x_max must exceed x_min");
    if (n_points < 8 || !is_pow2(n_points))
        throw InvalidGridError("SpatialGrid: n_points must be a power of two >= 8");
    dx_ = (x_max - x_min) / static_cast<double>(n_points);
    if (!(dx_ > 0.0) || !std::isfinite(dx_))
        throw InvalidGridError("SpatialGrid: non-positive or non-finite spacing");
}

std::vector<double> SpatialGrid::points() const {
    std::vector<double> xs(n_);
    for (std::size_t i = 0; i < n_; ++i) xs[i] = point(i);
    return xs;
}

std::vector<double> SpatialGrid::wavenumbers() const {
    std::vector<double> ks(n_);
    const double dk = 2.0 * std::numbers::pi / (static_cast<double>(n_) * dx_);
    const std::size_t half = n_ / 2;
    for (std::size_t j = 0; j < half; ++j) ks[j] = dk * static_cast<double>(j);
    for (std::size_t j = half; j < n_; ++j)
        ks[j] = dk * (static_cast<double>(j) - static_cast<double>(n_));
    return ks;
}

} // namespace pilotwave
