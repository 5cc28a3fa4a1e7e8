#include "semiphoton/planewave.hpp"

#include <stdexcept>

namespace semiphoton {

double dispersion_energy(const Vec3& p, double mass, EnergyBranch branch, const Units& u) {
    if (mass < 0.0) throw std::invalid_argument("dispersion_energy: mass must be >= 0");
    const double c = u.c;
    const double root = std::sqrt(c * c * norm2(p) + mass * mass * c * c * c * c);
    return branch == EnergyBranch::positive ? root : -root;
}

namespace {

// The four published amplitude families for given (eps, p). The positive
// branch divides by eps + m c^2, the negative one by -eps + m c^2; both equal
// 2 m c^2 at p = 0, so the rest case is division-safe for m > 0.
Bispinor family_amplitude(double eps, const Vec3& p, double mass, EnergyBranch branch, int index,
                          const Units& u) {
    const double c = u.c;
    const double mc2 = mass * c * c;
    const cplx p_plus = c * cplx(p.x, p.y);    // c (p_x + i p_y)
    const cplx p_minus = c * cplx(p.x, -p.y);  // c (p_x - i p_y)
    const double p_z = c * p.z;

    Bispinor b;
    if (branch == EnergyBranch::positive) {
        const double denom = eps + mc2;
        if (denom == 0.0)
            throw std::invalid_argument("build_spinor: degenerate denominator (massless rest state)");
        if (index == 1) {
            b[0] = -p_z / denom;
            b[1] = -p_plus / denom;
            b[2] = 1.0;
            b[3] = 0.0;
        } else {
            b[0] = -p_minus / denom;
            b[1] = p_z / denom;
            b[2] = 0.0;
            b[3] = 1.0;
        }
    } else {
        const double denom = -eps + mc2;
        if (denom == 0.0)
            throw std::invalid_argument("build_spinor: degenerate denominator (massless rest state)");
        if (index == 1) {
            b[0] = 1.0;
            b[1] = 0.0;
            b[2] = p_z / denom;
            b[3] = p_plus / denom;
        } else {
            b[0] = 0.0;
            b[1] = 1.0;
            b[2] = p_minus / denom;
            b[3] = -p_z / denom;
        }
    }
    return b;
}

}  // namespace

PlaneWaveSolution build_spinor(const Vec3& p, double mass, EnergyBranch branch, int index,
                               double phi, const Units& u) {
    if (index != 1 && index != 2) throw std::invalid_argument("build_spinor: index must be 1 or 2");
    PlaneWaveSolution sol;
    sol.momentum = p;
    sol.branch = branch;
    sol.index = index;
    sol.phase = phi;
    sol.mass = mass;
    sol.units = u;
    sol.energy = dispersion_energy(p, mass, branch, u);
    sol.amplitude = family_amplitude(sol.energy, p, mass, branch, index, u) *
                    std::exp(iu * cplx(phi));
    return sol;
}

double system_residual(const PlaneWaveSolution& sol, double mass) {
    const Units& u = sol.units;
    const double c = u.c;
    const double mc2 = mass * c * c;
    const double eps = sol.energy;
    const Vec3& p = sol.momentum;
    const Bispinor& B = sol.amplitude;
    const cplx p_plus = c * cplx(p.x, p.y);
    const cplx p_minus = c * cplx(p.x, -p.y);
    const double p_z = c * p.z;

    const cplx r1 = (eps + mc2) * B[0] + p_z * B[2] + p_minus * B[3];
    const cplx r2 = (eps + mc2) * B[1] + p_plus * B[2] - p_z * B[3];
    const cplx r3 = (eps - mc2) * B[2] + p_z * B[0] + p_minus * B[1];
    const cplx r4 = (eps - mc2) * B[3] + p_plus * B[0] - p_z * B[1];
    return std::max({std::abs(r1), std::abs(r2), std::abs(r3), std::abs(r4)});
}

Matrix4 characteristic_matrix(double eps, const Vec3& p, double mass, const AlphaSet& a,
                              const Units& u) {
    const double c = u.c;
    Matrix4 m = eps * a.alpha0 + (c * p.x) * a.alpha1 + (c * p.y) * a.alpha2 +
                (c * p.z) * a.alpha3 + (mass * c * c) * a.alpha4;
    return m;
}

Bispinor specialize_y(double mass, EnergyBranch branch, int index, double phi, const Units& u) {
    const double mc2 = mass * u.c * u.c;
    const Vec3 p{0.0, mass * u.c, 0.0};
    const double eps = branch == EnergyBranch::positive ? mc2 : -mc2;  // as published
    return family_amplitude(eps, p, mass, branch, index, u) * std::exp(iu * cplx(phi));
}

Bispinor wavefunction(const PlaneWaveSolution& sol, const Vec3& r, double t) {
    const double hbar = sol.units.hbar;
    const double theta = (dot(sol.momentum, r) - sol.energy * t) / hbar;
    return sol.amplitude * std::exp(iu * cplx(theta));
}

Bispinor dirac_residual(const PlaneWaveSolution& sol, const Vec3& r, double t, const AlphaSet& a) {
    // eps_hat psi = eps psi and p_hat psi = p psi analytically, so the
    // operator reduces to the characteristic matrix acting on psi(r, t).
    const Matrix4 m = characteristic_matrix(sol.energy, sol.momentum, sol.mass, a, sol.units);
    return apply(m, wavefunction(sol, r, t));
}

GramMatrix orthogonality_check(const PlaneWaveSolution& a, const PlaneWaveSolution& b) {
    const double na = a.amplitude.norm();
    const double nb = b.amplitude.norm();
    if (na == 0.0 || nb == 0.0)
        throw std::invalid_argument("orthogonality_check: zero amplitude");
    GramMatrix g;
    g.g11 = inner(a.amplitude, a.amplitude) / (na * na);
    g.g12 = inner(a.amplitude, b.amplitude) / (na * nb);
    g.g21 = inner(b.amplitude, a.amplitude) / (na * nb);
    g.g22 = inner(b.amplitude, b.amplitude) / (nb * nb);
    return g;
}

double phase_aligned_distance(const Bispinor& a, const Bispinor& b) {
    const cplx overlap = inner(b, a);
    const cplx phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : cplx(1.0);
    return (a - b * phase).max_abs();
}

}  // namespace semiphoton
