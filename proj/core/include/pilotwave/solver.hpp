#pragma once

#include <optional>
#include <span>

#include "pilotwave/field.hpp"
#include "pilotwave/potential.hpp"

namespace pilotwave {

struct SolverConfig1D {
    SpatialGrid grid;
    double mass; // eV fs^2/nm^2
    double dt;   // fs
};

struct SolverConfig2D {
    SpatialGrid grid1;
    SpatialGrid grid2;
    double mass1;
    double mass2;
    double dt;
};

/// Construction-time stability heuristics.  potential_phase uses the
/// caller-supplied |V| scale over the dynamically occupied region (the
/// bulk of the initial packets); the kinetic phase at the grid Nyquist
/// mode is reported as a diagnostic only, since the kinetic factor is
/// applied exactly in k-space and phase wrap in unoccupied modes is
/// harmless.
struct StabilityReport {
    double potential_phase = 0.0;
    double nyquist_phase_1 = 0.0;
    double nyquist_phase_2 = 0.0;
    bool potential_ok() const { return potential_phase < 0.1; }
};

StabilityReport check_stability(const SolverConfig1D& cfg, double v_scale);
StabilityReport check_stability(const SolverConfig2D& cfg, double v_scale);

/// Strang split-step of the 1D Schroedinger equation with a static-for-
/// this-step real potential sampled on psi's grid.  Unitary.
Field1D step_1d(const Field1D& psi, std::span<const double> v_slice,
                const SolverConfig1D& cfg);

/// Schroedinger-type step with complex, possibly psi-dependent potential
/// terms: i hbar dpsi/dt = -(hbar^2/2m) psi'' + (v_real + v_complex) psi.
/// The potential half-steps apply exp(-i (v_real+v_complex) dt / 2 hbar),
/// so the norm is not preserved in general.
Field1D step_1d_nonunitary(const Field1D& psi, std::span<const double> v_real,
                           std::span<const Complex> v_complex,
                           const SolverConfig1D& cfg);

/// One Strang step of the two-particle Schroedinger equation.
Field2D step_2d(const Field2D& psi, const PotentialSpec& p, double t,
                const SolverConfig2D& cfg);

/// Reusable 1D stepper with the kinetic phase precomputed.  The two-slice
/// overloads apply the start-of-step potential in the first half-step and
/// the end-of-step potential in the second, which keeps time-dependent
/// couplings second-order accurate.
class Solver1D {
public:
    explicit Solver1D(SolverConfig1D cfg);

    const SolverConfig1D& config() const { return cfg_; }

    void step(Field1D& psi, std::span<const double> v_slice) const;
    void step(Field1D& psi, std::span<const double> v_start,
              std::span<const double> v_end) const;
    void step_nonunitary(Field1D& psi, std::span<const double> v_real,
                         std::span<const Complex> v_complex) const;
    void step_nonunitary(Field1D& psi, std::span<const double> v_real_start,
                         std::span<const Complex> v_complex_start,
                         std::span<const double> v_real_end,
                         std::span<const Complex> v_complex_end) const;

private:
    void half_potential(Field1D& psi, std::span<const double> v) const;
    void half_potential_complex(Field1D& psi, std::span<const double> v_real,
                                std::span<const Complex> v_complex) const;
    void kinetic_full(Field1D& psi) const;

    SolverConfig1D cfg_;
    std::vector<Complex> kinetic_phase_;
};

/// Reusable 2D stepper; caches the potential phase when the potential is
/// time-independent.  Throws NumericalError (with the running step index)
/// if the stepped field stops being finite.
class Solver2D {
public:
    Solver2D(SolverConfig2D cfg, PotentialSpec p);

    const SolverConfig2D& config() const { return cfg_; }

    void step(Field2D& psi, double t, std::size_t step_index);

private:
    SolverConfig2D cfg_;
    PotentialSpec potential_;
    std::vector<Complex> kinetic_phase_;                // outer product layout
    std::optional<std::vector<Complex>> static_v_phase_; // exp(-i V dt / 2 hbar)
    std::vector<Complex> build_v_phase(double t) const;
};

/// <T> and <V> for diagnostics and conservation tests.
double kinetic_expectation(const Field1D& psi, double mass);
double kinetic_expectation(const Field2D& psi, double mass1, double mass2);
double potential_expectation(const Field2D& psi, const PotentialSpec& p, double t);

} // namespace pilotwave
