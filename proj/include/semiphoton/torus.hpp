// Torus-geometry electron model: the circular-photon parameters fixed by the
// pair-production threshold, the ring displacement current, charge and mass
// quadratures, the spin chain and magnetic moment, and the coupling constant
// q^2 / (hbar c) = 2/pi that the closed-form chain lands on.
//
// Everything here is Gaussian CGS; the electron defaults are CODATA 2018.
#pragma once

#include <cstddef>
#include <string>

#include "semiphoton/types.hpp"

namespace semiphoton {

struct PhysicalConstants {
    double hbar = 1.054571817e-27;  // erg s
    double c = 2.99792458e10;       // cm/s
    double m_e = 9.1093837015e-28;  // g
    double e = 4.80320471257e-10;   // statC

    static PhysicalConstants codata2018() { return {}; }
    static PhysicalConstants natural() { return {1.0, 1.0, 1.0, 1.0}; }
};

struct TorusModel {
    double r_p = 0.0;          // torus radius, hbar / (2 m c)
    double lambda_p = 0.0;     // wavelength 2 pi r_p
    double omega_p = 0.0;      // angular frequency 2 m c^2 / hbar = c / r_p
    double E_o = 0.0;          // wave amplitude (statvolt/cm); 0 when unset
    double S_tr = 0.0;         // cross section pi r_p^2
    double delta_tau_p = 0.0;  // torus volume 2 pi^2 r_p^3
};

/// Circular-photon geometry from the pair-production threshold eps = 2 m c^2.
/// The amplitude E_o stays unset.
TorusModel photon_parameters(const PhysicalConstants& k);

/// Displacement current of the ring wave, split into the frame components:
/// j_n = (1/4pi) dE/dt along the normal, j_tau = (omega/4pi) E along the
/// tangent; complex form j_n + i j_tau.
struct DisplacementCurrent {
    double j_n = 0.0;
    double j_tau = 0.0;
    cplx complex_form{};
};

DisplacementCurrent displacement_current(double E, double omega, double dE_dt);

/// Charge quadrature over the full wave period: (1/4pi)(w/c) E_o S_tr
/// int_0^lambda cos(k l) dl. Zero up to roundoff — the ring current flips
/// direction each half period. n_quad >= 64 required.
double full_wave_charge(const TorusModel& m, std::size_t n_quad);

/// Same integrand cut at the half period (the contrast case; nonzero).
double half_period_charge_quadrature(const TorusModel& m, std::size_t n_quad);

/// Half-wave (single lobe) charge: closed form q = (1/pi) E_o S_s = E_o r_s^2
/// with S_s = pi r_s^2, plus the quadrature cross-check of the lobe integral.
struct HalfWaveCharge {
    double closed_form = 0.0;  // E_o S_s / pi
    double reduced = 0.0;      // E_o r_s^2
    double quadrature = 0.0;
};

HalfWaveCharge half_wave_charge(const TorusModel& m, std::size_t n_quad = 1024);

/// Field mass of the half wave. Closed form m_s = pi E_o^2 r_s^2 / (4 w c);
/// the density-route quadrature integrates rho_m = E_o^2 cos^2(k l)/(4 pi c^2)
/// over the cross section and the quarter- and half-period arcs (the model
/// text leaves the upper limit ambiguous, so both are reported).
struct SemiPhotonMass {
    double closed_form = 0.0;
    double quadrature_quarter = 0.0;  // upper limit lambda/4
    double quadrature_half = 0.0;     // upper limit lambda/2
    double closed_over_quarter = 0.0; // = 4 with the printed prefactors
    double prefactor_factor = 0.0;    // printed integral prefactor / density = 4
};

SemiPhotonMass semi_photon_mass(const TorusModel& m, const PhysicalConstants& k,
                                std::size_t n_quad = 1024);

/// Coupling constant chain: r_s = pi q^2 / (4 m c^2) inverted for q^2 with
/// m = m_e and r_s = hbar/(2 m_e c) gives q^2/(hbar c) = 2/pi exactly.
struct CouplingReport {
    double alpha_q = 0.0;   // q^2 / hbar c from the chain
    double q = 0.0;         // sqrt(2 hbar c / pi)
    double alpha_em = 0.0;  // e^2 / hbar c
    double ratio = 0.0;     // alpha_q / alpha_em
};

CouplingReport coupling_constant(const PhysicalConstants& k);

/// sigma_p = p_p r_p = hbar, halved on division, and the radius the half
/// keeps: r_s = sigma_s / p_s = r_p. Values are the exact closed-form
/// reductions; the unreduced product chain is cross-checked in tests.
struct SpinChain {
    double sigma_p = 0.0;
    double sigma_s = 0.0;
    double r_s = 0.0;
};

SpinChain spin_chain(const PhysicalConstants& k);

/// Ring-current magnetic moment: I = q w_s / 2pi, S_I = pi r_s^2. The model
/// text writes mu_s = (1/2) q hbar / (2 m_e), which drops the /c of a
/// Gaussian current-loop moment; both readings are returned, and the ratio
/// to the matching magneton is 1/2 either way.
struct MagneticMoment {
    double current = 0.0;        // I
    double loop_area = 0.0;      // S_I
    double mu_printed = 0.0;     // q hbar / (4 m_e)
    double mu_gaussian = 0.0;    // I S_I / c = q hbar / (4 m_e c)
    double bohr_ratio = 0.0;     // exactly 1/2
    std::string unit_note;
};

MagneticMoment magnetic_moment(const PhysicalConstants& k, double q);

/// Magnetic confinement force density f_M = (1/c) j_tau x H_s. Direction and
/// magnitude only; no balance claim is made.
Vec3 stability_force_density(const Vec3& j_tau, const Vec3& h_s, double c);

/// The headline numbers of the model in one bundle.
struct ModelReport {
    TorusModel geometry;
    double q = 0.0;         // charge from the constants chain
    double E_o_implied = 0.0;  // amplitude with q = E_o r_s^2
    double m_s = 0.0;       // mass the chain returns with q and r_s (= m_e)
    double sigma_s = 0.0;
    double mu_printed = 0.0;
    double mu_gaussian = 0.0;
    double bohr_ratio = 0.0;
    double alpha_q = 0.0;
    double alpha_em = 0.0;
    double alpha_ratio = 0.0;
};

ModelReport build_model_report(const PhysicalConstants& k);

}  // namespace semiphoton
