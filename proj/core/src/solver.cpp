#include "pilotwave/solver.hpp"

#include <cmath>
#include <numbers>

#include "pilotwave/errors.hpp"
#include "pilotwave/spectral.hpp"
#include "pilotwave/units.hpp"

namespace pilotwave {

namespace {

double nyquist_phase(const SpatialGrid& g, double mass, double dt) {
    const double k_ny = std::numbers::pi / g.dx();
    return units::hbar * k_ny * k_ny * dt / (2.0 * mass);
}

void require_dt(double dt) {
    if (!(dt > 0.0)) throw ConfigError("SolverConfig: dt must be positive");
}

std::vector<Complex> kinetic_phase_1d(const SpatialGrid& g, double mass, double dt) {
    const auto ks = g.wavenumbers();
    std::vector<Complex> ph(ks.size());
    for (std::size_t j = 0; j < ks.size(); ++j)
        ph[j] = std::exp(Complex(0.0, -units::hbar * ks[j] * ks[j] * dt / (2.0 * mass)));
    return ph;
}

} // namespace

StabilityReport check_stability(const SolverConfig1D& cfg, double v_scale) {
    require_dt(cfg.dt);
    StabilityReport r;
    r.potential_phase = std::abs(v_scale) * cfg.dt / units::hbar;
    r.nyquist_phase_1 = nyquist_phase(cfg.grid, cfg.mass, cfg.dt);
    return r;
}

StabilityReport check_stability(const SolverConfig2D& cfg, double v_scale) {
    require_dt(cfg.dt);
    StabilityReport r;
    r.potential_phase = std::abs(v_scale) * cfg.dt / units::hbar;
    r.nyquist_phase_1 = nyquist_phase(cfg.grid1, cfg.mass1, cfg.dt);
    r.nyquist_phase_2 = nyquist_phase(cfg.grid2, cfg.mass2, cfg.dt);
    return r;
}

Solver1D::Solver1D(SolverConfig1D cfg)
    : cfg_(cfg), kinetic_phase_(kinetic_phase_1d(cfg.grid, cfg.mass, cfg.dt)) {
    require_dt(cfg.dt);
}

void Solver1D::half_potential(Field1D& psi, std::span<const double> v) const {
    const double s = -cfg_.dt / (2.0 * units::hbar);
    for (std::size_t i = 0; i < psi.size(); ++i)
        psi[i] *= std::exp(Complex(0.0, s * v[i]));
}

void Solver1D::half_potential_complex(Field1D& psi, std::span<const double> v_real,
                                      std::span<const Complex> v_complex) const {
    const double s = -cfg_.dt / (2.0 * units::hbar);
    for (std::size_t i = 0; i < psi.size(); ++i) {
        const Complex w(v_real[i] + v_complex[i].real(), v_complex[i].imag());
        psi[i] *= std::exp(Complex(0.0, s) * w);
    }
}

void Solver1D::kinetic_full(Field1D& psi) const {
    fft_forward(psi.values());
    for (std::size_t j = 0; j < psi.size(); ++j) psi[j] *= kinetic_phase_[j];
    fft_inverse(psi.values());
}

void Solver1D::step(Field1D& psi, std::span<const double> v_slice) const {
    step(psi, v_slice, v_slice);
}

void Solver1D::step(Field1D& psi, std::span<const double> v_start,
                    std::span<const double> v_end) const {
    half_potential(psi, v_start);
    kinetic_full(psi);
    half_potential(psi, v_end);
}

void Solver1D::step_nonunitary(Field1D& psi, std::span<const double> v_real,
                               std::span<const Complex> v_complex) const {
    step_nonunitary(psi, v_real, v_complex, v_real, v_complex);
}

void Solver1D::step_nonunitary(Field1D& psi, std::span<const double> v_real_start,
                               std::span<const Complex> v_complex_start,
                               std::span<const double> v_real_end,
                               std::span<const Complex> v_complex_end) const {
    const double n0 = norm_squared(psi);
    half_potential_complex(psi, v_real_start, v_complex_start);
    kinetic_full(psi);
    half_potential_complex(psi, v_real_end, v_complex_end);
    const double n1 = norm_squared(psi);
    if (!std::isfinite(n1) || (n0 > 0.0 && n1 > 1e6 * n0))
        throw NumericalError("step_1d_nonunitary: norm blew up within one step");
}

Field1D step_1d(const Field1D& psi, std::span<const double> v_slice,
                const SolverConfig1D& cfg) {
    if (!(psi.grid() == cfg.grid)) throw ConfigError("step_1d: field grid mismatch");
    Field1D out = psi;
    Solver1D(cfg).step(out, v_slice);
    if (!all_finite(out)) throw NumericalError("step_1d: non-finite result");
    return out;
}

Field1D step_1d_nonunitary(const Field1D& psi, std::span<const double> v_real,
                           std::span<const Complex> v_complex,
                           const SolverConfig1D& cfg) {
    if (!(psi.grid() == cfg.grid))
        throw ConfigError("step_1d_nonunitary: field grid mismatch");
    Field1D out = psi;
    Solver1D(cfg).step_nonunitary(out, v_real, v_complex);
    return out;
}

Solver2D::Solver2D(SolverConfig2D cfg, PotentialSpec p)
    : cfg_(cfg), potential_(std::move(p)) {
    require_dt(cfg.dt);
    // Outer product of the per-axis kinetic phases: a product initial state
    // stepped under a separable potential then factorizes exactly.
    const auto ph1 = kinetic_phase_1d(cfg_.grid1, cfg_.mass1, cfg_.dt);
    const auto ph2 = kinetic_phase_1d(cfg_.grid2, cfg_.mass2, cfg_.dt);
    kinetic_phase_.resize(ph1.size() * ph2.size());
    for (std::size_t i = 0; i < ph1.size(); ++i)
        for (std::size_t j = 0; j < ph2.size(); ++j)
            kinetic_phase_[i * ph2.size() + j] = ph1[i] * ph2[j];
    if (potential_.time_independent()) static_v_phase_ = build_v_phase(0.0);
}

std::vector<Complex> Solver2D::build_v_phase(double t) const {
    const std::size_t n1 = cfg_.grid1.size(), n2 = cfg_.grid2.size();
    std::vector<Complex> ph(n1 * n2);
    const double s = -cfg_.dt / (2.0 * units::hbar);
    for (std::size_t i = 0; i < n1; ++i) {
        const double x1 = cfg_.grid1.point(i);
        for (std::size_t j = 0; j < n2; ++j) {
            const double v = potential_.evaluate_full(x1, cfg_.grid2.point(j), t);
            ph[i * n2 + j] = std::exp(Complex(0.0, s * v));
        }
    }
    return ph;
}

void Solver2D::step(Field2D& psi, double t, std::size_t step_index) {
    if (!(psi.grid1() == cfg_.grid1) || !(psi.grid2() == cfg_.grid2))
        throw ConfigError("step_2d: field grid mismatch");
    const std::size_t n1 = cfg_.grid1.size(), n2 = cfg_.grid2.size();
    const std::vector<Complex>* vph = nullptr;
    std::vector<Complex> dynamic_phase;
    if (static_v_phase_) {
        vph = &*static_v_phase_;
    } else {
        dynamic_phase = build_v_phase(t);
        vph = &dynamic_phase;
    }
    auto& v = psi.values();
    for (std::size_t m = 0; m < v.size(); ++m) v[m] *= (*vph)[m];
    fft2_forward(v, n1, n2);
    for (std::size_t m = 0; m < v.size(); ++m) v[m] *= kinetic_phase_[m];
    fft2_inverse(v, n1, n2);
    for (std::size_t m = 0; m < v.size(); ++m) v[m] *= (*vph)[m];
    const double n = norm_squared(psi);
    if (!std::isfinite(n))
        throw NumericalError("step_2d: non-finite field", step_index);
}

Field2D step_2d(const Field2D& psi, const PotentialSpec& p, double t,
                const SolverConfig2D& cfg) {
    Field2D out = psi;
    Solver2D solver(cfg, p);
    solver.step(out, t, 0);
    return out;
}

double kinetic_expectation(const Field1D& psi, double mass) {
    std::vector<Complex> hat = psi.values();
    fft_forward(hat);
    const auto ks = psi.grid().wavenumbers();
    long double num = 0.0L, den = 0.0L;
    for (std::size_t j = 0; j < hat.size(); ++j) {
        const double w = std::norm(hat[j]);
        num += w * units::hbar * units::hbar * ks[j] * ks[j] / (2.0 * mass);
        den += w;
    }
    return static_cast<double>(num / den);
}

double kinetic_expectation(const Field2D& psi, double mass1, double mass2) {
    std::vector<Complex> hat = psi.values();
    const std::size_t n1 = psi.grid1().size(), n2 = psi.grid2().size();
    fft2_forward(hat, n1, n2);
    const auto k1 = psi.grid1().wavenumbers();
    const auto k2 = psi.grid2().wavenumbers();
    long double num = 0.0L, den = 0.0L;
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) {
            const double w = std::norm(hat[i * n2 + j]);
            num += w * (units::hbar * units::hbar * k1[i] * k1[i] / (2.0 * mass1) +
                        units::hbar * units::hbar * k2[j] * k2[j] / (2.0 * mass2));
            den += w;
        }
    return static_cast<double>(num / den);
}

double potential_expectation(const Field2D& psi, const PotentialSpec& p, double t) {
    long double num = 0.0L, den = 0.0L;
    const std::size_t n1 = psi.grid1().size(), n2 = psi.grid2().size();
    for (std::size_t i = 0; i < n1; ++i) {
        const double x1 = psi.grid1().point(i);
        for (std::size_t j = 0; j < n2; ++j) {
            const double w = std::norm(psi.at(i, j));
            num += w * p.evaluate_full(x1, psi.grid2().point(j), t);
            den += w;
        }
    }
    return static_cast<double>(num / den);
}

} // namespace pilotwave
