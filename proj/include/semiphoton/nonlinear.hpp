// Self-energy functionals, the cubic self-interaction wave equation
//   [a0 (eps_hat - eps_s) + c alpha.(p_hat - p_s)] psi = 0,
// its damped self-consistency iteration, and the Lagrangian identities
// (Fierz correlation, field-invariant identity, photon-photon coefficient
// comparison).
#pragma once

#include <string>
#include <vector>

#include "semiphoton/bispinor.hpp"
#include "semiphoton/evolution.hpp"
#include "semiphoton/planewave.hpp"

namespace semiphoton {

struct SelfEnergy {
    double eps_s = 0.0;
    Vec3 p_s;
};

struct NonlinearConfig {
    double r_s = 0.5;          // hbar / (2 m c) in natural units
    double delta_tau = -1.0;   // < 0 means the torus closed form 2 pi^2 r_s^3
    double damping = 0.5;      // fixed-point damping in (0, 1]
    int max_iters = 100;
    double tol = 1e-12;        // relative change stop condition
    Units units;

    double delta_tau_s() const {
        return delta_tau > 0.0 ? delta_tau : 2.0 * pi * pi * r_s * r_s * r_s;
    }
};

/// Field-form self energy of a uniform sample: eps_s = U dtau, p_s = g dtau
/// with U = (|E|^2 + |H|^2)/8pi and g = Re(E* x H)/(4 pi c).
SelfEnergy self_energy_integral(const EMFieldPoint& f, double volume,
                                const Units& u = Units::natural());

/// Same quadrature over a lattice state: dtau = cross_section * dy per point.
SelfEnergy self_energy_integral(const FieldGrid1D& grid, double cross_section,
                                const Units& u = Units::natural());

/// Quantum-form self energy of one bispinor sample:
///   eps_s = (dtau/8pi) psi^+ a0 psi,  p_s = -(dtau/8pi c) psi^+ a_vec psi.
/// Note the sign: this is the flux convention of the bispinor dynamics, the
/// field-form momentum above carries the opposite sign on the same state.
SelfEnergy self_energy_bilinear(const Bispinor& psi, double delta_tau, const AlphaSet& a,
                                const Units& u = Units::natural());

/// || (a0 eps_s + s c alpha.p_s) psi + s beta m c^2 psi ||, s = ±1: how far
/// the state is from realizing the mass term through its own self energy.
double mass_substitution_residual(const Bispinor& psi, const SelfEnergy& se, double mass, int sign,
                                  const AlphaSet& a, const Units& u = Units::natural());

/// Plane-wave state of the cubic equation: psi = B e^{i(k y - w t)}.
struct NonlinearState {
    Bispinor B;
    double k = 0.0;      // wavenumber along y
    double omega = 0.0;  // phase frequency; eps_hat psi = hbar omega psi
};

/// Full operator value [a0 (eps - eps_s) + c alpha.(p - p_s)] B with
/// (eps_s, p_s) the quantum-form functionals of B itself.
Bispinor nonlinear_operator(const NonlinearState& st, const NonlinearConfig& cfg,
                            const AlphaSet& a);

/// Linear part (a0 eps + c alpha.p) B — degree 1 in the amplitude.
Bispinor nonlinear_linear_term(const NonlinearState& st, const NonlinearConfig& cfg,
                               const AlphaSet& a);

/// Self part -(a0 eps_s + c alpha.p_s) B — degree 3 in the amplitude.
Bispinor nonlinear_self_term(const NonlinearState& st, const NonlinearConfig& cfg,
                             const AlphaSet& a);

double nonlinear_residual(const NonlinearState& st, const NonlinearConfig& cfg, const AlphaSet& a);

/// Self-consistent plane wave: B in the alpha_y eigenspace picked by the sign
/// of k, amplitude fixed so that the eigenvalue pair equals the self-energy
/// pair (eps, c p) = (eps_s, c p_s). For k = 0 the state lives in the lower
/// beta eigenspace and target_mass sets eps_s = m c^2.
NonlinearState make_self_consistent_state(double k, const NonlinearConfig& cfg,
                                          double target_mass = 0.0);

struct IterTraceRow {
    int iter = 0;
    double eps_s = 0.0;
    double p_s_norm = 0.0;
    double residual = 0.0;
};

struct IterationResult {
    NonlinearState state;
    std::vector<IterTraceRow> trace;
    bool converged = false;
    int iterations = 0;
};

/// Damped fixed-point iteration: alternate the (eps_s, p_s) evaluation with a
/// re-solve of the linearized eigenproblem, mixing the new amplitude in with
/// cfg.damping. Non-convergence is reported through the flag and trace, not
/// as an error. target_mass is required for k = 0 (it pins the amplitude).
IterationResult iterate_self_consistent(const NonlinearState& initial, const NonlinearConfig& cfg,
                                        const AlphaSet& a, double target_mass = 0.0);

/// Dirac-form Lagrangian density of a y-wave,
///   (1/c) psi^+ dpsi/dt - psi^+ a_y dpsi/dy - i (m c / hbar) psi^+ beta psi;
/// zero on solutions of the linear equation.
cplx lagrangian_dirac(const Bispinor& psi, const Bispinor& dpsi_dt, const Bispinor& dpsi_dy,
                      double mass, const AlphaSet& a, const Units& u = Units::natural());

/// Field-form Lagrangian of the same density, in the convention of the
/// bispinor dynamics (energy-flux term enters with a minus sign), plus the
/// equivalent current form using j_e = i (w_s/4pi) E, j_m = i (w_s/4pi) H
/// with w_s = 2 m c^2 / hbar. The two agree identically; both vanish on
/// solutions.
struct SemiphotonLagrangian {
    cplx field_form{};
    cplx current_form{};
    double form_difference() const { return std::abs(field_form - current_form); }
};

SemiphotonLagrangian lagrangian_semiphoton(const EMFieldPoint& f, const EMFieldPoint& df_dt,
                                           const EMFieldPoint& df_dy, double omega_s,
                                           const Units& u = Units::natural());

/// Lattice-history form: fields at the midpoint of two grids dt apart, time
/// derivative by the centered difference, space derivative by the 4th-order
/// stencil. Returns the largest |L| over the lattice and the largest
/// difference between the two forms.
struct GridLagrangian {
    double max_field_form = 0.0;
    double max_form_difference = 0.0;
};

GridLagrangian lagrangian_semiphoton(const FieldGrid1D& a, const FieldGrid1D& b,
                                     const Units& u = Units::natural());

/// | (E^2+H^2)^2 - 4 (E x H)^2 - (E^2-H^2)^2 - 4 (E.H)^2 | on real vectors.
double em_identity_check(const Vec3& E, const Vec3& H);

/// | (psi^+ a0 psi)^2 - sum_k (psi^+ a_k psi)^2 - (psi^+ a4 psi)^2 - (psi^+ a5 psi)^2 |.
double fierz_check(const Bispinor& psi, const AlphaSet& a);

struct LagrangianReport {
    cplx L_dirac{};
    cplx L_semi_photon{};
    cplx L_nonlinear_quantum{};   // kinetic + (dtau/8pi)[(b0)^2 - sum_k (bk)^2]
    cplx L_nonlinear_em{};        // (1/8pi)(E^2-H^2) + dtau/((8pi)^2 m c^2) [(E^2-H^2)^2 + 4(E.H)^2]
    double fierz_residual = 0.0;  // |selfQ - (dtau/8pi)[(b4)^2 + (b5)^2]|
    double em_identity_residual = 0.0;  // field-route identity residual
    double dual_path_residual = 0.0;    // |selfQ - 8 pi m c^2 selfEM| / scale, real states only
    bool fields_real = false;
};

LagrangianReport lagrangian_nonlinear(const NonlinearState& st, const NonlinearConfig& cfg,
                                      double mass, const AlphaSet& a);

/// Self-term coefficient of the cubic equation versus the weak-field
/// photon-photon coefficient b = (2/45) e^4 hbar / (m^4 c^7). Informational:
/// the comparison is reported, not asserted as physical agreement.
struct PhotonPhotonComparison {
    double c_n = 0.0;                // dtau_s / ((8pi)^2 m c^2)
    double c_n_closed_form = 0.0;    // hbar^3 / (256 m^4 c^5)
    double b = 0.0;
    double ratio = 0.0;              // c_n / b
    double ratio_closed_form = 0.0;  // (45/512) (hbar c / e^2)^2
    int inner_coeff_cubic = 4;       // coefficient of (E.H)^2 in the cubic self term
    int inner_coeff_weak_field = 7;  // coefficient of (E.H)^2 in the weak-field expansion
    std::string note;
};

struct CubicCoefficientAudit {
    double printed = 0.0;   // r_s^3 / (2 alpha_q c), alpha_q = 2/pi
    double derived = 0.0;   // dtau_s / (8 pi hbar) = r_s^3 / (2 alpha_q hbar)
    double ratio = 0.0;     // printed / derived = hbar / c
    std::string note;
};

PhotonPhotonComparison photon_photon_coefficient_compare(double hbar, double c, double m_e,
                                                         double e);

CubicCoefficientAudit cubic_coefficient_audit(double hbar, double c, double m_e);

}  // namespace semiphoton
