#include "semiphoton/torus.hpp"

#include <cmath>
#include <stdexcept>

namespace semiphoton {

namespace {

// Composite Simpson rule; n is rounded up to the next even panel count.
template <typename F>
double simpson(F&& f, double a, double b, std::size_t n) {
    if (n % 2 != 0) ++n;
    const double h = (b - a) / static_cast<double>(n);
    double acc = f(a) + f(b);
    for (std::size_t i = 1; i < n; ++i)
        acc += f(a + h * static_cast<double>(i)) * (i % 2 == 0 ? 2.0 : 4.0);
    return acc * h / 3.0;
}

}  // namespace

TorusModel photon_parameters(const PhysicalConstants& k) {
    TorusModel m;
    m.omega_p = 2.0 * k.m_e * k.c * k.c / k.hbar;
    m.r_p = k.hbar / (2.0 * k.m_e * k.c);
    m.lambda_p = 2.0 * pi * m.r_p;
    m.S_tr = pi * m.r_p * m.r_p;
    m.delta_tau_p = 2.0 * pi * pi * m.r_p * m.r_p * m.r_p;
    return m;
}

DisplacementCurrent displacement_current(double E, double omega, double dE_dt) {
    if (omega < 0.0) throw std::invalid_argument("displacement_current: omega must be >= 0");
    DisplacementCurrent j;
    j.j_n = dE_dt / (4.0 * pi);
    j.j_tau = omega * E / (4.0 * pi);
    j.complex_form = cplx(j.j_n, j.j_tau);
    return j;
}

double full_wave_charge(const TorusModel& m, std::size_t n_quad) {
    if (n_quad < 64) throw std::invalid_argument("full_wave_charge: n_quad must be >= 64");
    const double k_p = 1.0 / m.r_p;  // omega_p / c with omega_p r_p = c
    const double coef = m.E_o * m.S_tr / (4.0 * pi * m.r_p);  // (1/4pi)(w/c) E_o S_tr
    return coef * simpson([&](double l) { return std::cos(k_p * l); }, 0.0, m.lambda_p, n_quad);
}

double half_period_charge_quadrature(const TorusModel& m, std::size_t n_quad) {
    if (n_quad < 64) throw std::invalid_argument("half_period_charge_quadrature: n_quad >= 64");
    const double k_p = 1.0 / m.r_p;
    const double coef = m.E_o * m.S_tr / (4.0 * pi * m.r_p);
    return coef * simpson([&](double l) { return std::cos(k_p * l); }, 0.0, m.lambda_p / 4.0,
                          n_quad) * 2.0;
}

HalfWaveCharge half_wave_charge(const TorusModel& m, std::size_t n_quad) {
    if (m.E_o == 0.0) throw std::invalid_argument("half_wave_charge: amplitude E_o unset");
    const double r_s = m.r_p;  // the half keeps the torus size
    const double S_s = pi * r_s * r_s;
    const double k_s = 1.0 / r_s;
    HalfWaveCharge q;
    q.closed_form = m.E_o * S_s / pi;
    q.reduced = m.E_o * r_s * r_s;
    // positive lobe of the half wave, prefactor chosen to match the closed form
    q.quadrature = (m.E_o * S_s / (pi * r_s)) *
                   simpson([&](double l) { return std::cos(k_s * l); }, 0.0,
                           pi * r_s / 2.0 /* lambda_s / 4 */, n_quad);
    return q;
}

SemiPhotonMass semi_photon_mass(const TorusModel& m, const PhysicalConstants& k,
                                std::size_t n_quad) {
    if (m.E_o == 0.0) throw std::invalid_argument("semi_photon_mass: amplitude E_o unset");
    const double r_s = m.r_p;
    const double S_s = pi * r_s * r_s;
    const double omega_s = m.omega_p;
    const double k_s = 1.0 / r_s;
    const double c2 = k.c * k.c;

    SemiPhotonMass out;
    out.closed_form = pi * m.E_o * m.E_o * r_s * r_s / (4.0 * omega_s * k.c);

    // density route: rho_m = E_o^2 cos^2(k l) / (4 pi c^2) over S_s x arc
    const auto density = [&](double l) {
        const double cl = std::cos(k_s * l);
        return m.E_o * m.E_o * cl * cl / (4.0 * pi * c2);
    };
    const double lambda_s = 2.0 * pi * r_s;
    out.quadrature_quarter = S_s * simpson(density, 0.0, lambda_s / 4.0, n_quad);
    out.quadrature_half = S_s * simpson(density, 0.0, lambda_s / 2.0, n_quad);
    out.closed_over_quarter = out.closed_form / out.quadrature_quarter;
    // the integral-form prefactor S_s E_o^2 / (pi c^2) against the density
    // prefactor S_s E_o^2 / (4 pi c^2)
    out.prefactor_factor = (S_s * m.E_o * m.E_o / (pi * c2)) /
                           (S_s * m.E_o * m.E_o / (4.0 * pi * c2));
    return out;
}

CouplingReport coupling_constant(const PhysicalConstants& k) {
    CouplingReport r;
    const double r_s = k.hbar / (2.0 * k.m_e * k.c);
    const double mc2 = k.m_e * k.c * k.c;
    const double q2 = 4.0 * mc2 * r_s / pi;  // r_s = pi q^2 / (4 m c^2) inverted
    r.alpha_q = q2 / (k.hbar * k.c);
    r.q = std::sqrt(q2);
    r.alpha_em = k.e * k.e / (k.hbar * k.c);
    r.ratio = r.alpha_q / r.alpha_em;
    return r;
}

SpinChain spin_chain(const PhysicalConstants& k) {
    SpinChain s;
    s.sigma_p = k.hbar;            // p_p r_p = (2 m c)(hbar / 2 m c)
    s.sigma_s = 0.5 * s.sigma_p;   // equal split between the halves
    s.r_s = k.hbar / (2.0 * k.m_e * k.c);  // sigma_s / p_s with p_s = m c; equals r_p
    return s;
}

MagneticMoment magnetic_moment(const PhysicalConstants& k, double q) {
    if (q < 0.0) throw std::invalid_argument("magnetic_moment: q must be >= 0");
    MagneticMoment m;
    const double r_s = k.hbar / (2.0 * k.m_e * k.c);
    const double omega_s = 2.0 * k.m_e * k.c * k.c / k.hbar;
    m.current = q * omega_s / (2.0 * pi);
    m.loop_area = pi * r_s * r_s;
    m.mu_printed = 0.5 * (q * k.hbar / (2.0 * k.m_e));
    m.mu_gaussian = 0.5 * (q * k.hbar / (2.0 * k.m_e * k.c));
    // same numerator/denominator pair either way, so exactly 1/2
    m.bohr_ratio = m.mu_gaussian / (q > 0.0 ? q * k.hbar / (2.0 * k.m_e * k.c) : 1.0);
    if (q == 0.0) m.bohr_ratio = 0.0;
    m.unit_note =
        "I S_I reduces to (1/2) q hbar / 2 m_e under w r = c; a Gaussian loop moment carries an "
        "extra 1/c (mu = I S / c), so both readings are reported";
    return m;
}

Vec3 stability_force_density(const Vec3& j_tau, const Vec3& h_s, double c) {
    return cross(j_tau, h_s) / c;
}

ModelReport build_model_report(const PhysicalConstants& k) {
    ModelReport r;
    r.geometry = photon_parameters(k);
    const CouplingReport coupling = coupling_constant(k);
    const SpinChain spin = spin_chain(k);
    r.q = coupling.q;
    r.E_o_implied = r.q / (spin.r_s * spin.r_s);
    // m_s = pi q^2 / (4 w c r_s^2) closes back on the electron mass
    const double omega_s = r.geometry.omega_p;
    r.m_s = pi * r.q * r.q / (4.0 * omega_s * k.c * spin.r_s * spin.r_s);
    r.sigma_s = spin.sigma_s;
    const MagneticMoment mu = magnetic_moment(k, r.q);
    r.mu_printed = mu.mu_printed;
    r.mu_gaussian = mu.mu_gaussian;
    r.bohr_ratio = mu.bohr_ratio;
    r.alpha_q = coupling.alpha_q;
    r.alpha_em = coupling.alpha_em;
    r.alpha_ratio = coupling.ratio;
    return r;
}

}  // namespace semiphoton
