#include "pilotwave/field.hpp"

#include <cmath>
#include <numbers>

#include "pilotwave/errors.hpp"

namespace pilotwave {

Field1D::Field1D(SpatialGrid grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size())
        throw ConfigError("Field1D: value count does not match grid");
}

Field1D::Field1D(SpatialGrid grid) : grid_(grid), values_(grid.size(), Complex{0.0, 0.0}) {}

Field2D::Field2D(SpatialGrid grid1, SpatialGrid grid2, std::vector<Complex> values)
    : grid1_(grid1), grid2_(grid2), values_(std::move(values)) {
    if (values_.size() != grid1_.size() * grid2_.size())
        throw ConfigError("Field2D: value count does not match grids");
}

Field2D::Field2D(SpatialGrid grid1, SpatialGrid grid2)
    : grid1_(grid1), grid2_(grid2), values_(grid1.size() * grid2.size(), Complex{0.0, 0.0}) {}

namespace {
// Extended-precision accumulation keeps the norm stable enough to resolve
// 1e-12-level drifts over long runs.
double sum_abs2(const std::vector<Complex>& v) {
    long double acc = 0.0L;
    for (const Complex& z : v) {
        const long double re = z.real(), im = z.imag();
        acc += re * re + im * im;
    }
    return static_cast<double>(acc);
}
} // namespace

double norm_squared(const Field1D& f) { return sum_abs2(f.values()) * f.grid().dx(); }

double norm_squared(const Field2D& f) {
    return sum_abs2(f.values()) * f.grid1().dx() * f.grid2().dx();
}

Field2D outer_product(const Field1D& a, const Field1D& b) {
    Field2D out(a.grid(), b.grid());
    const std::size_t n1 = a.size(), n2 = b.size();
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) out.at(i, j) = a[i] * b[j];
    return out;
}

Field1D gaussian_packet(const SpatialGrid& grid, double center, double width,
                        double phase_slope) {
    if (!(width > 0.0)) throw ConfigError("gaussian_packet: width must be positive");
    Field1D f(grid);
    const double norm = std::pow(std::numbers::pi * width * width, -0.25);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double u = grid.point(i) - center;
        f[i] = norm * std::exp(Complex(-u * u / (2.0 * width * width), phase_slope * u));
    }
    return f;
}

namespace {
bool finite_values(const std::vector<Complex>& v) {
    for (const Complex& z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}
} // namespace

bool all_finite(const Field1D& f) { return finite_values(f.values()); }
bool all_finite(const Field2D& f) { return finite_values(f.values()); }

} // namespace pilotwave
