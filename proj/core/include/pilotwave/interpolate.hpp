#pragma once

#include <array>

#include "pilotwave/field.hpp"

namespace pilotwave {

/// Catmull-Rom weights for a fractional offset t in [0,1) relative to the
/// second point of a 4-point stencil.  At t == 0 the weights are exactly
/// {0,1,0,0}, so on-node queries return stored values bit-for-bit.
std::array<double, 4> catmull_rom_weights(double t);

/// Cubic (Catmull-Rom) interpolation of a 1D complex field at x.
/// Throws OutOfDomainError if x lies outside the grid extent.
Complex interpolate(const Field1D& f, double x);

/// Tensor-product Catmull-Rom interpolation of a 2D field at (x1, x2).
/// Identical to interpolating each x2-column and then interpolating the
/// resulting 1D field in x1, which keeps 1D and 2D evaluation paths
/// consistent on product fields.
Complex interpolate(const Field2D& f, double x1, double x2);

/// Interpolate a 2D field along x2 at fixed x2 = q for every x1 grid point;
/// the workhorse behind conditional-slice extraction.
Field1D interpolate_slice_x2(const Field2D& f, double q);

/// Same along x1 at fixed x1 = q, sampled over the x2 grid.
Field1D interpolate_slice_x1(const Field2D& f, double q);

} // namespace pilotwave
