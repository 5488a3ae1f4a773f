#include "pilotwave/potential.hpp"

#include <cmath>
#include <stdexcept>
#include <variant>

#include "pilotwave/errors.hpp"

namespace pilotwave {

SeparablePart SeparablePart::zero() {
    auto z = [](double, double) { return 0.0; };
    return {z, z, z};
}

SeparablePart SeparablePart::harmonic(double f) {
    return {[f](double x, double) { return f * x * x; },
            [f](double x, double) { return 2.0 * f * x; },
            [f](double, double) { return 2.0 * f; }};
}

namespace {

struct Separable {
    SeparablePart v1, v2;
};

struct HarmonicCoupled {
    double f, c;
};

struct Custom {
    SpatialGrid g1, g2;
    std::vector<double> samples; // row-major, x2 fastest

    double at(std::size_t i, std::size_t j) const { return samples[i * g2.size() + j]; }

    // nearest-node lookup with clamped central differences
    std::size_t index1(double x) const { return clamp_index(g1, x); }
    std::size_t index2(double x) const { return clamp_index(g2, x); }

    static std::size_t clamp_index(const SpatialGrid& g, double x) {
        double s = std::round((x - g.x_min()) / g.dx());
        if (s < 0.0) s = 0.0;
        if (s > static_cast<double>(g.size() - 1)) s = static_cast<double>(g.size() - 1);
        return static_cast<std::size_t>(s);
    }
};

} // namespace

struct PotentialSpec::Impl {
    std::variant<Separable, HarmonicCoupled, Custom> v;
};

PotentialSpec PotentialSpec::separable(SeparablePart v1, SeparablePart v2) {
    return PotentialSpec(
        std::make_shared<Impl>(Impl{Separable{std::move(v1), std::move(v2)}}));
}

PotentialSpec PotentialSpec::harmonic_coupled(double f, double c) {
    return PotentialSpec(std::make_shared<Impl>(Impl{HarmonicCoupled{f, c}}));
}

PotentialSpec PotentialSpec::custom(SpatialGrid g1, SpatialGrid g2,
                                    std::vector<double> samples) {
    if (samples.size() != g1.size() * g2.size())
        throw ConfigError("PotentialSpec::custom: sample count does not match grids");
    return PotentialSpec(std::make_shared<Impl>(Impl{Custom{g1, g2, std::move(samples)}}));
}

double PotentialSpec::evaluate_full(double x1, double x2, double t) const {
    return std::visit(
        [&](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Separable>)
                return p.v1.value(x1, t) + p.v2.value(x2, t);
            else if constexpr (std::is_same_v<T, HarmonicCoupled>)
                return p.f * (x1 * x1 + x2 * x2) + p.c * x1 * x2;
            else
                return p.at(p.index1(x1), p.index2(x2));
        },
        impl_->v);
}

std::vector<double> PotentialSpec::conditional_slice(int which, double other_position,
                                                     double t,
                                                     const SpatialGrid& grid) const {
    if (which != 1 && which != 2)
        throw std::invalid_argument("conditional_slice: which must be 1 or 2");
    if (!std::isfinite(other_position))
        throw std::invalid_argument("conditional_slice: other_position must be finite");
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.point(i);
        out[i] = (which == 1) ? evaluate_full(x, other_position, t)
                              : evaluate_full(other_position, x, t);
    }
    return out;
}

namespace {

double custom_partial(const Custom& p, double x1, double x2, int axis, int order) {
    const std::size_t i = p.index1(x1);
    const std::size_t j = p.index2(x2);
    const SpatialGrid& g = (axis == 1) ? p.g1 : p.g2;
    const std::size_t n = g.size();
    const std::size_t c = (axis == 1) ? i : j;
    const std::size_t lo = (c + n - 1) % n;
    const std::size_t hi = (c + 1) % n;
    auto val = [&](std::size_t q) { return (axis == 1) ? p.at(q, j) : p.at(i, q); };
    if (order == 1) return (val(hi) - val(lo)) / (2.0 * g.dx());
    return (val(hi) - 2.0 * val(c) + val(lo)) / (g.dx() * g.dx());
}

} // namespace

double PotentialSpec::d_dx2(double x1, double x2, double t, int order) const {
    if (order != 1 && order != 2)
        throw std::invalid_argument("d_dx2: order must be 1 or 2");
    return std::visit(
        [&](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Separable>)
                return order == 1 ? p.v2.d1(x2, t) : p.v2.d2(x2, t);
            else if constexpr (std::is_same_v<T, HarmonicCoupled>)
                return order == 1 ? 2.0 * p.f * x2 + p.c * x1 : 2.0 * p.f;
            else
                return custom_partial(p, x1, x2, 2, order);
        },
        impl_->v);
}

double PotentialSpec::d_dx1(double x1, double x2, double t, int order) const {
    if (order != 1 && order != 2)
        throw std::invalid_argument("d_dx1: order must be 1 or 2");
    return std::visit(
        [&](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Separable>)
                return order == 1 ? p.v1.d1(x1, t) : p.v1.d2(x1, t);
            else if constexpr (std::is_same_v<T, HarmonicCoupled>)
                return order == 1 ? 2.0 * p.f * x1 + p.c * x2 : 2.0 * p.f;
            else
                return custom_partial(p, x1, x2, 1, order);
        },
        impl_->v);
}

std::vector<double> PotentialSpec::d_other_field(int which, double other_position, double t,
                                                 int order, const SpatialGrid& grid) const {
    if (which != 1 && which != 2)
        throw std::invalid_argument("d_other_field: which must be 1 or 2");
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.point(i);
        out[i] = (which == 1) ? d_dx2(x, other_position, t, order)
                              : d_dx1(other_position, x, t, order);
    }
    return out;
}

bool PotentialSpec::time_independent() const {
    // Separable closures may depend on t; the other variants never do.
    return !std::holds_alternative<Separable>(impl_->v);
}

} // namespace pilotwave
