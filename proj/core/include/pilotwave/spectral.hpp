#pragma once

#include "pilotwave/field.hpp"

namespace pilotwave {

// Discrete Fourier transforms on power-of-two periodic grids.  The forward
// transform is unnormalized; the inverse divides by the point count, so
// inverse(forward(f)) == f up to rounding.  Plans are cached per shape and
// chosen deterministically, and execution is safe from concurrent threads.
void fft_forward(std::vector<Complex>& data);
void fft_inverse(std::vector<Complex>& data);
void fft2_forward(std::vector<Complex>& data, std::size_t n1, std::size_t n2);
void fft2_inverse(std::vector<Complex>& data, std::size_t n1, std::size_t n2);

/// nth spatial derivative (order in {1,2,3,4}) by forward transform,
/// multiplication by (ik)^n, inverse transform.  For odd orders the
/// unpaired Nyquist mode is zeroed.
Field1D spectral_derivative(const Field1D& f, int order);

/// Partial derivative of a 2D field along axis 1 or 2, same scheme.
Field2D spectral_partial(const Field2D& f, int axis, int order);

} // namespace pilotwave
