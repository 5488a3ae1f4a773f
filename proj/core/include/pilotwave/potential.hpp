#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "pilotwave/field.hpp"

namespace pilotwave {

/// One additive term of a separable potential: value and its first two
/// own-coordinate derivatives as closures of (x, t).
struct SeparablePart {
    std::function<double(double, double)> value;
    std::function<double(double, double)> d1;
    std::function<double(double, double)> d2;

    static SeparablePart zero();
    static SeparablePart harmonic(double f); // f*x^2, eV/nm^2
};

/// Symbolic two-particle potential V(x1, x2, t), evaluable pointwise, along
/// conditional slices, and analytically differentiable in either coordinate.
/// HarmonicCoupled is F*(x1^2+x2^2) + C*x1*x2 with F, C in eV/nm^2.
/// Custom wraps a grid-sampled time-independent V and differentiates by
/// second-order central differences.
class PotentialSpec {
public:
    static PotentialSpec separable(SeparablePart v1, SeparablePart v2);
    static PotentialSpec harmonic_coupled(double f, double c);
    static PotentialSpec custom(SpatialGrid g1, SpatialGrid g2, std::vector<double> samples);

    double evaluate_full(double x1, double x2, double t) const;

    /// V with the other coordinate frozen: which=1 gives V(x, other, t) on
    /// the grid; which=2 gives V(other, x, t).
    std::vector<double> conditional_slice(int which, double other_position, double t,
                                          const SpatialGrid& grid) const;

    /// Analytic (or central-difference) partial derivative with respect to
    /// x2, order in {1,2}.
    double d_dx2(double x1, double x2, double t, int order) const;
    /// Same with respect to x1.
    double d_dx1(double x1, double x2, double t, int order) const;

    /// Derivative with respect to the *other* particle's coordinate as a
    /// field over this particle's grid: which=1 returns dV/dx2(x, other, t)
    /// sampled over x; which=2 returns dV/dx1(other, x, t).
    std::vector<double> d_other_field(int which, double other_position, double t, int order,
                                      const SpatialGrid& grid) const;

    bool time_independent() const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit PotentialSpec(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

} // namespace pilotwave
