#include "pilotwave/interpolate.hpp"

#include <cmath>

#include "pilotwave/errors.hpp"

namespace pilotwave {

std::array<double, 4> catmull_rom_weights(double t) {
    const double t2 = t * t;
    const double t3 = t2 * t;
    return {-0.5 * t3 + t2 - 0.5 * t,
            1.5 * t3 - 2.5 * t2 + 1.0,
            -1.5 * t3 + 2.0 * t2 + 0.5 * t,
            0.5 * t3 - 0.5 * t2};
}

namespace {

struct Stencil {
    std::array<std::size_t, 4> idx;
    std::array<double, 4> w;
};

Stencil make_stencil(const SpatialGrid& g, double x) {
    if (!g.contains(x))
        throw OutOfDomainError("interpolate: point outside grid extent");
    const double s = (x - g.x_min()) / g.dx();
    double fl = std::floor(s);
    std::size_t i = static_cast<std::size_t>(fl);
    double t = s - fl;
    if (i >= g.size()) { // guard against rounding at the upper edge
        i = g.size() - 1;
        t = 0.0;
    }
    Stencil st;
    st.w = catmull_rom_weights(t);
    const std::size_t n = g.size();
    st.idx = {(i + n - 1) % n, i, (i + 1) % n, (i + 2) % n};
    return st;
}

} // namespace

Complex interpolate(const Field1D& f, double x) {
    const Stencil st = make_stencil(f.grid(), x);
    Complex acc{0.0, 0.0};
    for (int a = 0; a < 4; ++a) acc += st.w[a] * f[st.idx[a]];
    return acc;
}

Complex interpolate(const Field2D& f, double x1, double x2) {
    const Stencil s1 = make_stencil(f.grid1(), x1);
    const Stencil s2 = make_stencil(f.grid2(), x2);
    Complex acc{0.0, 0.0};
    for (int a = 0; a < 4; ++a) {
        Complex row{0.0, 0.0};
        for (int b = 0; b < 4; ++b) row += s2.w[b] * f.at(s1.idx[a], s2.idx[b]);
        acc += s1.w[a] * row;
    }
    return acc;
}

Field1D interpolate_slice_x2(const Field2D& f, double q) {
    const Stencil st = make_stencil(f.grid2(), q);
    Field1D out(f.grid1());
    for (std::size_t i = 0; i < f.grid1().size(); ++i) {
        Complex acc{0.0, 0.0};
        for (int b = 0; b < 4; ++b) acc += st.w[b] * f.at(i, st.idx[b]);
        out[i] = acc;
    }
    return out;
}

Field1D interpolate_slice_x1(const Field2D& f, double q) {
    const Stencil st = make_stencil(f.grid1(), q);
    Field1D out(f.grid2());
    for (std::size_t j = 0; j < f.grid2().size(); ++j) {
        Complex acc{0.0, 0.0};
        for (int a = 0; a < 4; ++a) acc += st.w[a] * f.at(st.idx[a], j);
        out[j] = acc;
    }
    return out;
}

} // namespace pilotwave
