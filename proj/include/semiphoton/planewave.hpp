// Free-particle plane-wave solutions psi_j = B_j exp(i(k.r - w t)) of the
// bispinor equation (eps + c alpha.p + beta m c^2) psi = 0 and their checks.
#pragma once

#include "semiphoton/bispinor.hpp"

namespace semiphoton {

enum class EnergyBranch { positive, negative };

/// Determinant root eps_± = ±sqrt(c^2 p^2 + m^2 c^4).
double dispersion_energy(const Vec3& p, double mass, EnergyBranch branch,
                         const Units& u = Units::natural());

struct PlaneWaveSolution {
    Vec3 momentum;
    double energy = 0.0;
    EnergyBranch branch = EnergyBranch::positive;
    int index = 1;       // 1 or 2 within the branch
    Bispinor amplitude;  // B_j = b_j e^{i phi}, stored as published (unnormalized)
    double phase = 0.0;  // phi
    double mass = 0.0;
    Units units;
};

/// One of the four published solution families. index 1 has B_3 = 1, B_4 = 0
/// (positive branch) resp. B_1 = 1, B_2 = 0 (negative branch); index 2 the
/// mirrored pair. Amplitudes stay unnormalized for literal comparability.
PlaneWaveSolution build_spinor(const Vec3& p, double mass, EnergyBranch branch, int index,
                               double phi = 0.0, const Units& u = Units::natural());

/// Max absolute residual of the four linear equations
///   (eps + m c^2) B_1 + c p_z B_3 + c (p_x - i p_y) B_4 = 0
///   (eps + m c^2) B_2 + c (p_x + i p_y) B_3 - c p_z B_4 = 0
///   (eps - m c^2) B_3 + c p_z B_1 + c (p_x - i p_y) B_2 = 0
///   (eps - m c^2) B_4 + c (p_x + i p_y) B_1 - c p_z B_2 = 0
/// evaluated at the solution's (eps, p, B).
double system_residual(const PlaneWaveSolution& sol, double mass);

/// The characteristic matrix eps + c alpha.p + beta m c^2; its rows reproduce
/// the linear system above entry for entry.
Matrix4 characteristic_matrix(double eps, const Vec3& p, double mass, const AlphaSet& a,
                              const Units& u = Units::natural());

/// The y-specialization: p_x = p_z = 0, p_y = m c with eps forced to ±m c^2
/// (the published substitution; it deliberately ignores the dispersion value
/// sqrt(2) m c^2) and phase phi. Defaults to phi = pi/2.
Bispinor specialize_y(double mass, EnergyBranch branch, int index, double phi = pi / 2,
                      const Units& u = Units::natural());

/// B e^{i(k.r - w t)} with hbar w = eps, hbar k = p. phi is already folded
/// into B, so r = 0, t = 0 returns the stored amplitude.
Bispinor wavefunction(const PlaneWaveSolution& sol, const Vec3& r, double t);

/// (eps_hat + c alpha.p_hat + beta m c^2) psi at (r, t) via the analytic
/// derivatives of the plane wave; zero for genuine solutions.
Bispinor dirac_residual(const PlaneWaveSolution& sol, const Vec3& r, double t, const AlphaSet& a);

/// Gram matrix of the two solution indices at fixed momentum and branch,
/// after unit normalization.
struct GramMatrix {
    cplx g11, g12, g21, g22;
    double max_offdiag() const { return std::max(std::abs(g12), std::abs(g21)); }
};

GramMatrix orthogonality_check(const PlaneWaveSolution& a, const PlaneWaveSolution& b);

/// |phase-aligned difference| between two spinors, minimized over one global
/// complex phase: || a - e^{i t} b || with e^{i t} = <b,a>/|<b,a>|.
double phase_aligned_distance(const Bispinor& a, const Bispinor& b);

}  // namespace semiphoton
