#pragma once

#include <complex>
#include <vector>

#include "pilotwave/grid.hpp"

namespace pilotwave {

using Complex = std::complex<double>;

/// Complex amplitudes sampled on a 1D periodic grid.  Conditional fields
/// carry an arbitrary overall scale; nothing here assumes unit norm.
class Field1D {
public:
    Field1D(SpatialGrid grid, std::vector<Complex> values);
    explicit Field1D(SpatialGrid grid); // zero-filled

    const SpatialGrid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }

    Complex& operator[](std::size_t i) { return values_[i]; }
    const Complex& operator[](std::size_t i) const { return values_[i]; }

    std::vector<Complex>& values() { return values_; }
    const std::vector<Complex>& values() const { return values_; }

private:
    SpatialGrid grid_;
    std::vector<Complex> values_;
};

/// Complex amplitudes on the tensor grid grid1 x grid2, row-major with the
/// second index fastest: value(i1, i2) = values[i1*n2 + i2].
class Field2D {
public:
    Field2D(SpatialGrid grid1, SpatialGrid grid2, std::vector<Complex> values);
    Field2D(SpatialGrid grid1, SpatialGrid grid2); // zero-filled

    const SpatialGrid& grid1() const { return grid1_; }
    const SpatialGrid& grid2() const { return grid2_; }
    std::size_t size() const { return values_.size(); }

    Complex& at(std::size_t i1, std::size_t i2) { return values_[i1 * grid2_.size() + i2]; }
    const Complex& at(std::size_t i1, std::size_t i2) const {
        return values_[i1 * grid2_.size() + i2];
    }

    std::vector<Complex>& values() { return values_; }
    const std::vector<Complex>& values() const { return values_; }

private:
    SpatialGrid grid1_;
    SpatialGrid grid2_;
    std::vector<Complex> values_;
};

/// sum |f|^2 * dV with dV = dx (1D) or dx1*dx2 (2D).
double norm_squared(const Field1D& f);
double norm_squared(const Field2D& f);

/// Outer product a(x1)*b(x2); the standard way product initial states are
/// assembled so that 1D and 2D pipelines start from identical amplitudes.
Field2D outer_product(const Field1D& a, const Field1D& b);

/// Normalized Gaussian packet (pi w^2)^(-1/4) exp(-(x-c)^2/(2 w^2) + i k0 (x-c)).
Field1D gaussian_packet(const SpatialGrid& grid, double center, double width,
                        double phase_slope = 0.0);

bool all_finite(const Field1D& f);
bool all_finite(const Field2D& f);

} // namespace pilotwave
