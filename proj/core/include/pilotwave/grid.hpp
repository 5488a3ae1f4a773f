#pragma once

#include <cstddef>
#include <vector>

namespace pilotwave {

/// Uniform periodic grid on [x_min, x_max): point n_points wraps to point 0.
/// n_points must be a power of two (>= 8) so spectral transforms apply.
class SpatialGrid {
public:
    SpatialGrid(double x_min, double x_max, std::size_t n_points);

    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    std::size_t size() const { return n_; }
    double dx() const { return dx_; }

    double point(std::size_t i) const { return x_min_ + static_cast<double>(i) * dx_; }
    bool contains(double x) const { return x >= x_min_ && x < x_max_; }

    std::vector<double> points() const;

    /// Fourier wavenumbers in FFT order: k_j = 2*pi*j/(N*dx), j in
    /// [0, N/2) then [-N/2, 0).
    std::vector<double> wavenumbers() const;

    bool operator==(const SpatialGrid& o) const {
        return x_min_ == o.x_min_ && x_max_ == o.x_max_ && n_ == o.n_;
    }

private:
    double x_min_;
    double x_max_;
    std::size_t n_;
    double dx_;
};

} // namespace pilotwave
