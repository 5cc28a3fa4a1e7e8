// 1-D periodic lattice integration of the bispinor wave equation
//   d psi / dt = c alpha_y d psi / dy + i omega beta psi,   omega = m c^2 / hbar
// (the y-restriction of (eps + c alpha.p + beta m c^2) psi = 0), with RK4 in
// time and a 4th-order central or spectral spatial derivative, plus the
// conservation, field-equation and force diagnostics built on top of it.
#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "semiphoton/bispinor.hpp"
#include "semiphoton/planewave.hpp"

namespace semiphoton {

struct FieldGrid1D {
    std::size_t n = 0;
    double dy = 0.0;
    double time = 0.0;
    double mass_omega = 0.0;  // omega = m c^2 / hbar
    std::array<std::vector<cplx>, 4> comp;

    FieldGrid1D(std::size_t n_points, double spacing, double omega);

    double length() const { return static_cast<double>(n) * dy; }
    Bispinor at(std::size_t i) const;
    void set(std::size_t i, const Bispinor& psi);
};

enum class SpatialScheme { central4, spectral };

struct EvolutionConfig {
    double dt = 0.0;
    std::size_t steps = 1;
    double cfl_limit = 0.5;  // c dt / dy must stay at or below this, capped at 0.5
    SpatialScheme spatial = SpatialScheme::central4;
    Units units;
};

/// Thrown when c dt / dy exceeds the configured bound; carries the largest
/// stable step for the caller to retry with.
struct CflViolation : std::runtime_error {
    double suggested_dt;
    CflViolation(const std::string& msg, double dt) : std::runtime_error(msg), suggested_dt(dt) {}
};

/// RK4 stepper with reusable scratch storage. One writer per grid: a stepper
/// instance must not be shared across concurrent step() calls.
class Rk4Stepper {
  public:
    Rk4Stepper(std::size_t n, SpatialScheme scheme, const Units& u = Units::natural());
    ~Rk4Stepper();
    Rk4Stepper(const Rk4Stepper&) = delete;
    Rk4Stepper& operator=(const Rk4Stepper&) = delete;

    void step(FieldGrid1D& grid, double dt);

    /// d psi / dy of one component into out (stencil or spectral).
    void derivative(const std::vector<cplx>& f, std::vector<cplx>& out, double dy);

    /// Right-hand side d psi / dt for the current grid contents.
    void rhs(const FieldGrid1D& grid, std::array<std::vector<cplx>, 4>& out);

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Single-step convenience wrapper with the CFL guard: refuses to step when
/// c dt / dy > min(cfg.cfl_limit, 0.5), throwing CflViolation.
FieldGrid1D step(const FieldGrid1D& grid, const EvolutionConfig& cfg);

/// Integral quadratures of the lattice state.
double total_norm(const FieldGrid1D& grid);  // int psi^+ psi dy
double total_energy(const FieldGrid1D& grid);  // int U dy = total_norm / 8 pi

/// Unit-normalize a grid state: int psi^+ psi dy = 1 after the call.
/// Throws std::invalid_argument for the zero state.
FieldGrid1D normalize(const FieldGrid1D& grid);

/// Probability density P = psi^+ a0 psi and its conserved flux
/// S_pr = -c psi^+ a_y psi, sampled pointwise.
std::vector<double> probability_density(const FieldGrid1D& grid);
std::vector<double> probability_flux(const FieldGrid1D& grid, const Units& u = Units::natural());

/// max_i | (P_b - P_a)/dt + d/dy (S_a + S_b)/2 |, the discrete continuity
/// statement between two grids dt apart (2nd order in dt, 4th in dy).
double continuity_residual(const FieldGrid1D& a, const FieldGrid1D& b,
                           const Units& u = Units::natural());

/// Pointwise mismatch between the two formulations of the same dynamics:
/// the bispinor-form time derivative versus the field-form equations
///   rot E - (1/c) dH/dt = i (omega/c) H
///   rot H + (1/c) dE/dt = i (omega/c) E
/// with both sides decoded from psi and differentiated by the same stencil.
struct MaxwellResidual {
    double max_mismatch = 0.0;
    double scale = 0.0;  // largest time-derivative magnitude encountered
    double relative() const { return scale > 0.0 ? max_mismatch / scale : max_mismatch; }
};

MaxwellResidual maxwell_current_residual(const FieldGrid1D& grid,
                                         const Units& u = Units::natural());

/// Maxwell stress tensor of a real field point:
///   tau_ij  = -(E_i E_j + H_i H_j) + (1/2) delta_ij (E^2 + H^2)
///   tau_i0  = (E x H)_i
///   tau_00  = (1/2) (E^2 + H^2)
struct StressTensor {
    double tau[3][3] = {};
    Vec3 tau_i0;
    double tau00 = 0.0;
};

StressTensor stress_tensor(const EMFieldPoint& f);

/// Normal force components of a wave spinning about the given axis:
///   oz: f_2 = (1/4pi)(w/c) E_x H_z,  f_0 = (1/4pi)(w/c) E_x^2
///   ox: f_2 = -(1/4pi)(w/c) E_z H_x, f_0 = -(1/4pi)(w/c) E_z^2
enum class SpinAxis { oz, ox };

struct SpinningForce {
    double f2 = 0.0;
    double f0 = 0.0;
};

SpinningForce spinning_force(double e_comp, double h_comp, double omega_s, SpinAxis axis,
                             const Units& u = Units::natural());

/// Lorentz-force diagnostics over a two-grid history:
///   f_2 = -(dg_y/dt + dU/dy),  f_0 = -((1/c) dU/dt + c dg_y/dy),
/// with U, g taken from the bilinear densities. f_1 and f_3 are evaluated
/// from the stress entries tau_10, tau_12, tau_30, tau_32 of the decoded
/// fields; they vanish identically for transverse states.
struct LorentzForceDiag {
    double f0_max = 0.0;
    double f2_max = 0.0;
    double f1_max = 0.0;
    double f3_max = 0.0;
};

LorentzForceDiag lorentz_force(const FieldGrid1D& a, const FieldGrid1D& b,
                               const Units& u = Units::natural());

/// One CSV-ready diagnostics sample of an evolution run.
struct Diagnostics {
    std::size_t step = 0;
    double time = 0.0;
    double total_norm = 0.0;
    double total_U = 0.0;
    double continuity_residual = 0.0;
};

// --- grid initial states ----------------------------------------------------

/// Plane-wave eigenstate with integer mode number (k = 2 pi mode / L).
FieldGrid1D make_eigenstate_grid(std::size_t n, double dy, double mass, int mode,
                                 EnergyBranch branch, int index, double phi = 0.0,
                                 const Units& u = Units::natural());

/// Massless right-moving Fourier mode (alpha_y eigenvector, eigenvalue -1).
FieldGrid1D make_massless_mode_grid(std::size_t n, double dy, int mode,
                                    const Units& u = Units::natural());

/// Superposition of two eigenstates (distinct modes), for refinement studies.
FieldGrid1D make_superposition_grid(std::size_t n, double dy, double mass, int mode_a, int mode_b,
                                    const Units& u = Units::natural());

}  // namespace semiphoton
