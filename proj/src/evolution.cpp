#include "semiphoton/evolution.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstring>

#include "semiphoton/kernels.hpp"

namespace semiphoton {

FieldGrid1D::FieldGrid1D(std::size_t n_points, double spacing, double omega)
    : n(n_points), dy(spacing), mass_omega(omega) {
    if (n < 8) throw std::invalid_argument("FieldGrid1D: need at least 8 points");
    if (dy <= 0.0) throw std::invalid_argument("FieldGrid1D: spacing must be positive");
    for (auto& c : comp) c.assign(n, cplx{});
}

Bispinor FieldGrid1D::at(std::size_t i) const {
    return Bispinor{{comp[0][i], comp[1][i], comp[2][i], comp[3][i]}};
}

void FieldGrid1D::set(std::size_t i, const Bispinor& psi) {
    for (std::size_t c = 0; c < 4; ++c) comp[c][i] = psi.c[c];
}

// --- stepper -----------------------------------------------------------------

struct Rk4Stepper::Impl {
    std::size_t n;
    SpatialScheme scheme;
    Units units;
    std::array<std::vector<cplx>, 4> k1, k2, k3, k4, stage, deriv;

    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    std::vector<cplx> fft_buf;

    Impl(std::size_t n_points, SpatialScheme s, const Units& u) : n(n_points), scheme(s), units(u) {
        for (auto* block : {&k1, &k2, &k3, &k4, &stage, &deriv})
            for (auto& v : *block) v.assign(n, cplx{});
        if (scheme == SpatialScheme::spectral) {
            fft_buf.assign(n, cplx{});
            auto* buf = reinterpret_cast<fftw_complex*>(fft_buf.data());
            fwd = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
            bwd = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
        }
    }

    ~Impl() {
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
    }

    void derivative(const std::vector<cplx>& f, std::vector<cplx>& out, double dy) {
        if (scheme == SpatialScheme::central4) {
            kernels::active_ops().cdiff4(f.data(), out.data(), n, 1.0 / (12.0 * dy));
            return;
        }
        // spectral: psi_hat_j *= i k_j / n, with the derivative Nyquist mode zeroed
        std::copy(f.begin(), f.end(), fft_buf.begin());
        fftw_execute(fwd);
        const double dk = 2.0 * pi / (static_cast<double>(n) * dy);
        const double inv_n = 1.0 / static_cast<double>(n);
        for (std::size_t j = 0; j < n; ++j) {
            double k;
            if (2 * j < n)
                k = dk * static_cast<double>(j);
            else if (2 * j == n)
                k = 0.0;
            else
                k = dk * (static_cast<double>(j) - static_cast<double>(n));
            fft_buf[j] *= cplx(0.0, k * inv_n);
        }
        fftw_execute(bwd);
        std::copy(fft_buf.begin(), fft_buf.end(), out.begin());
    }

    // d psi / dt = c alpha_y d psi / dy + i omega beta psi, expanded per component:
    //   rhs0 = +i (w psi0 - c d3),  rhs1 = +i (w psi1 + c d2)
    //   rhs2 = -i (w psi2 + c d1),  rhs3 = +i (c d0 - w psi3)
    void rhs(const std::array<std::vector<cplx>, 4>& psi, double dy, double omega,
             std::array<std::vector<cplx>, 4>& out) {
        const auto& ops = kernels::active_ops();
        const double c = units.c;
        for (std::size_t cidx = 0; cidx < 4; ++cidx) derivative(psi[cidx], deriv[cidx], dy);
        ops.iaxpby(out[0].data(), psi[0].data(), deriv[3].data(), omega, -c, +1.0, n);
        ops.iaxpby(out[1].data(), psi[1].data(), deriv[2].data(), omega, +c, +1.0, n);
        ops.iaxpby(out[2].data(), psi[2].data(), deriv[1].data(), omega, +c, -1.0, n);
        ops.iaxpby(out[3].data(), psi[3].data(), deriv[0].data(), -omega, +c, +1.0, n);
    }
};

Rk4Stepper::Rk4Stepper(std::size_t n, SpatialScheme scheme, const Units& u)
    : impl_(std::make_unique<Impl>(n, scheme, u)) {}

Rk4Stepper::~Rk4Stepper() = default;

void Rk4Stepper::derivative(const std::vector<cplx>& f, std::vector<cplx>& out, double dy) {
    impl_->derivative(f, out, dy);
}

void Rk4Stepper::rhs(const FieldGrid1D& grid, std::array<std::vector<cplx>, 4>& out) {
    impl_->rhs(grid.comp, grid.dy, grid.mass_omega, out);
}

void Rk4Stepper::step(FieldGrid1D& grid, double dt) {
    Impl& s = *impl_;
    if (grid.n != s.n) throw std::invalid_argument("Rk4Stepper: grid size mismatch");
    const auto& ops = kernels::active_ops();
    const double w = grid.mass_omega;
    const double dy = grid.dy;

    s.rhs(grid.comp, dy, w, s.k1);
    for (std::size_t c = 0; c < 4; ++c)
        ops.xpay(s.stage[c].data(), grid.comp[c].data(), s.k1[c].data(), dt / 2.0, s.n);
    s.rhs(s.stage, dy, w, s.k2);
    for (std::size_t c = 0; c < 4; ++c)
        ops.xpay(s.stage[c].data(), grid.comp[c].data(), s.k2[c].data(), dt / 2.0, s.n);
    s.rhs(s.stage, dy, w, s.k3);
    for (std::size_t c = 0; c < 4; ++c)
        ops.xpay(s.stage[c].data(), grid.comp[c].data(), s.k3[c].data(), dt, s.n);
    s.rhs(s.stage, dy, w, s.k4);

    for (std::size_t c = 0; c < 4; ++c) {
        ops.axpy(grid.comp[c].data(), s.k1[c].data(), dt / 6.0, s.n);
        ops.axpy(grid.comp[c].data(), s.k2[c].data(), dt / 3.0, s.n);
        ops.axpy(grid.comp[c].data(), s.k3[c].data(), dt / 3.0, s.n);
        ops.axpy(grid.comp[c].data(), s.k4[c].data(), dt / 6.0, s.n);
    }
    grid.time += dt;
}

FieldGrid1D step(const FieldGrid1D& grid, const EvolutionConfig& cfg) {
    const double bound = std::min(cfg.cfl_limit, 0.5);
    const double courant = cfg.units.c * cfg.dt / grid.dy;
    if (courant > bound) {
        const double suggested = bound * grid.dy / cfg.units.c;
        throw CflViolation("step: CFL violation (c dt / dy = " + std::to_string(courant) +
                               " > " + std::to_string(bound) + "); largest stable dt = " +
                               std::to_string(suggested),
                           suggested);
    }
    FieldGrid1D out = grid;
    Rk4Stepper stepper(grid.n, cfg.spatial, cfg.units);
    stepper.step(out, cfg.dt);
    return out;
}

// --- quadratures and densities ------------------------------------------------

double total_norm(const FieldGrid1D& grid) {
    const auto& ops = kernels::active_ops();
    double s = 0.0;
    for (const auto& c : grid.comp) s += ops.sum_abs2(c.data(), grid.n);
    return s * grid.dy;
}

double total_energy(const FieldGrid1D& grid) { return total_norm(grid) / (8.0 * pi); }

FieldGrid1D normalize(const FieldGrid1D& grid) {
    const double nrm = total_norm(grid);
    if (nrm == 0.0) throw std::invalid_argument("normalize: zero grid state");
    FieldGrid1D out = grid;
    const double s = 1.0 / std::sqrt(nrm);
    for (auto& c : out.comp)
        for (cplx& v : c) v *= s;
    return out;
}

std::vector<double> probability_density(const FieldGrid1D& grid) {
    std::vector<double> p(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) {
        double s = 0.0;
        for (const auto& c : grid.comp) s += std::norm(c[i]);
        p[i] = s;
    }
    return p;
}

namespace {

// psi^+ alpha_y psi at one lattice point (real by Hermiticity).
double flux_bilinear(const FieldGrid1D& g, std::size_t i) {
    const cplx v = std::conj(g.comp[0][i]) * (-iu * g.comp[3][i]) +
                   std::conj(g.comp[1][i]) * (iu * g.comp[2][i]) +
                   std::conj(g.comp[2][i]) * (-iu * g.comp[1][i]) +
                   std::conj(g.comp[3][i]) * (iu * g.comp[0][i]);
    return v.real();
}

// 4th-order periodic stencil on a real-valued array.
std::vector<double> d4_real(const std::vector<double>& f, double dy) {
    const std::size_t n = f.size();
    std::vector<double> out(n);
    const double inv12h = 1.0 / (12.0 * dy);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t im2 = (i + n - 2) % n;
        const std::size_t im1 = (i + n - 1) % n;
        const std::size_t ip1 = (i + 1) % n;
        const std::size_t ip2 = (i + 2) % n;
        out[i] = ((f[im2] - f[ip2]) + 8.0 * (f[ip1] - f[im1])) * inv12h;
    }
    return out;
}

}  // namespace

std::vector<double> probability_flux(const FieldGrid1D& grid, const Units& u) {
    std::vector<double> s(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) s[i] = -u.c * flux_bilinear(grid, i);
    return s;
}

double continuity_residual(const FieldGrid1D& a, const FieldGrid1D& b, const Units& u) {
    if (a.n != b.n) throw std::invalid_argument("continuity_residual: size mismatch");
    const double dt = b.time - a.time;
    if (dt == 0.0) throw std::invalid_argument("continuity_residual: grids must be dt apart");
    const auto pa = probability_density(a);
    const auto pb = probability_density(b);
    const auto sa = probability_flux(a, u);
    const auto sb = probability_flux(b, u);
    std::vector<double> s_mid(a.n);
    for (std::size_t i = 0; i < a.n; ++i) s_mid[i] = 0.5 * (sa[i] + sb[i]);
    const auto div_s = d4_real(s_mid, a.dy);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.n; ++i)
        worst = std::max(worst, std::abs((pb[i] - pa[i]) / dt + div_s[i]));
    return worst;
}

MaxwellResidual maxwell_current_residual(const FieldGrid1D& grid, const Units& u) {
    const std::size_t n = grid.n;
    const double c = u.c;
    const double w = grid.mass_omega;

    // bispinor-form time derivative
    Rk4Stepper stepper(n, SpatialScheme::central4, u);
    std::array<std::vector<cplx>, 4> rhs;
    for (auto& v : rhs) v.assign(n, cplx{});
    stepper.rhs(grid, rhs);

    // field-form: decode E, H, differentiate the decoded arrays
    std::array<std::vector<cplx>, 4> field;  // Ez, Ex, Hz, Hx
    for (auto& v : field) v.assign(n, cplx{});
    for (std::size_t i = 0; i < n; ++i) {
        const EMFieldPoint f = from_bispinor(grid.at(i));
        field[0][i] = f.E.z;
        field[1][i] = f.E.x;
        field[2][i] = f.H.z;
        field[3][i] = f.H.x;
    }
    std::array<std::vector<cplx>, 4> dfield;
    for (std::size_t k = 0; k < 4; ++k) {
        dfield[k].assign(n, cplx{});
        stepper.derivative(field[k], dfield[k], grid.dy);
    }

    MaxwellResidual r;
    const cplx icur(0.0, w);  // i omega
    for (std::size_t i = 0; i < n; ++i) {
        // rot E - (1/c) dH/dt = i (w/c) H   =>  dH/dt = c rot E - i w H
        const cplx dHx_m = c * dfield[0][i] - icur * field[3][i];   // (rot E)_x = dEz/dy
        const cplx dHz_m = -c * dfield[1][i] - icur * field[2][i];  // (rot E)_z = -dEx/dy
        // rot H + (1/c) dE/dt = i (w/c) E   =>  dE/dt = -c rot H + i w E
        const cplx dEx_m = -c * dfield[2][i] + icur * field[1][i];  // (rot H)_x = dHz/dy
        const cplx dEz_m = c * dfield[3][i] + icur * field[0][i];   // (rot H)_z = -dHx/dy

        const cplx dEz_d = rhs[0][i];
        const cplx dEx_d = rhs[1][i];
        const cplx dHz_d = -iu * rhs[2][i];
        const cplx dHx_d = -iu * rhs[3][i];

        r.max_mismatch = std::max({r.max_mismatch, std::abs(dEz_d - dEz_m),
                                   std::abs(dEx_d - dEx_m), std::abs(dHz_d - dHz_m),
                                   std::abs(dHx_d - dHx_m)});
        r.scale = std::max({r.scale, std::abs(dEz_m), std::abs(dEx_m), std::abs(dHz_m),
                            std::abs(dHx_m)});
    }
    return r;
}

// --- stress tensor and forces --------------------------------------------------

StressTensor stress_tensor(const EMFieldPoint& f) {
    if (!f.is_real(1e-12 * (std::sqrt(abs2(f.E)) + std::sqrt(abs2(f.H)))))
        throw std::invalid_argument("stress_tensor: field must be real-valued");
    const Vec3 E = f.E.real();
    const Vec3 H = f.H.real();
    const double sum = norm2(E) + norm2(H);
    StressTensor t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            t.tau[i][j] = -(E[i] * E[j] + H[i] * H[j]) + (i == j ? 0.5 * sum : 0.0);
    t.tau_i0 = cross(E, H);
    t.tau00 = 0.5 * sum;
    return t;
}

SpinningForce spinning_force(double e_comp, double h_comp, double omega_s, SpinAxis axis,
                             const Units& u) {
    if (omega_s < 0.0) throw std::invalid_argument("spinning_force: omega_s must be >= 0");
    const double k = omega_s / (4.0 * pi * u.c);
    SpinningForce f;
    if (axis == SpinAxis::oz) {
        f.f2 = k * e_comp * h_comp;
        f.f0 = k * e_comp * e_comp;
    } else {
        f.f2 = -k * e_comp * h_comp;
        f.f0 = -k * e_comp * e_comp;
    }
    return f;
}

LorentzForceDiag lorentz_force(const FieldGrid1D& a, const FieldGrid1D& b, const Units& u) {
    if (a.n != b.n) throw std::invalid_argument("lorentz_force: size mismatch");
    const double dt = b.time - a.time;
    if (dt == 0.0) throw std::invalid_argument("lorentz_force: grids must be dt apart");
    const std::size_t n = a.n;
    const double c = u.c;

    // U = P / 8pi and g_y = (psi^+ a_y psi) / (8 pi c), per grid
    auto density_pair = [&](const FieldGrid1D& g, std::vector<double>& U, std::vector<double>& gy) {
        const auto p = probability_density(g);
        U.resize(n);
        gy.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            U[i] = p[i] / (8.0 * pi);
            gy[i] = flux_bilinear(g, i) / (8.0 * pi * c);
        }
    };
    std::vector<double> Ua, Ub, ga, gb;
    density_pair(a, Ua, ga);
    density_pair(b, Ub, gb);

    std::vector<double> U_mid(n), g_mid(n);
    for (std::size_t i = 0; i < n; ++i) {
        U_mid[i] = 0.5 * (Ua[i] + Ub[i]);
        g_mid[i] = 0.5 * (ga[i] + gb[i]);
    }
    const auto dU = d4_real(U_mid, a.dy);
    const auto dg = d4_real(g_mid, a.dy);

    LorentzForceDiag d;
    for (std::size_t i = 0; i < n; ++i) {
        d.f2_max = std::max(d.f2_max, std::abs(-((gb[i] - ga[i]) / dt + dU[i])));
        d.f0_max = std::max(d.f0_max, std::abs(-((Ub[i] - Ua[i]) / (c * dt) + c * dg[i])));
    }

    // transverse force components, from the stress entries of the decoded
    // fields: f_1 = -(1/4pi)(d0 tau_10 + dy tau_12), likewise f_3
    auto stress_row = [&](const FieldGrid1D& g, std::vector<double>& t10, std::vector<double>& t12,
                          std::vector<double>& t30, std::vector<double>& t32) {
        t10.resize(n);
        t12.resize(n);
        t30.resize(n);
        t32.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const EMFieldPoint f = from_bispinor(g.at(i));
            const Vec3 E = f.E.real();
            const Vec3 H = f.H.real();
            const Vec3 exh = cross(E, H);
            t10[i] = exh.x;
            t30[i] = exh.z;
            t12[i] = -(E.x * E.y + H.x * H.y);
            t32[i] = -(E.z * E.y + H.z * H.y);
        }
    };
    std::vector<double> t10a, t12a, t30a, t32a, t10b, t12b, t30b, t32b;
    stress_row(a, t10a, t12a, t30a, t32a);
    stress_row(b, t10b, t12b, t30b, t32b);
    std::vector<double> t12_mid(n), t32_mid(n);
    for (std::size_t i = 0; i < n; ++i) {
        t12_mid[i] = 0.5 * (t12a[i] + t12b[i]);
        t32_mid[i] = 0.5 * (t32a[i] + t32b[i]);
    }
    const auto d12 = d4_real(t12_mid, a.dy);
    const auto d32 = d4_real(t32_mid, a.dy);
    const double inv4pi = 1.0 / (4.0 * pi);
    for (std::size_t i = 0; i < n; ++i) {
        d.f1_max = std::max(d.f1_max,
                            inv4pi * std::abs((t10b[i] - t10a[i]) / (c * dt) + d12[i]));
        d.f3_max = std::max(d.f3_max,
                            inv4pi * std::abs((t30b[i] - t30a[i]) / (c * dt) + d32[i]));
    }
    return d;
}

// --- initial states -------------------------------------------------------------

namespace {

void fill_mode(FieldGrid1D& grid, const Bispinor& amp, double k) {
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double y = static_cast<double>(i) * grid.dy;
        grid.set(i, amp * std::exp(iu * cplx(k * y)));
    }
}

}  // namespace

FieldGrid1D make_eigenstate_grid(std::size_t n, double dy, double mass, int mode,
                                 EnergyBranch branch, int index, double phi, const Units& u) {
    FieldGrid1D grid(n, dy, mass * u.c * u.c / u.hbar);
    const double k = 2.0 * pi * static_cast<double>(mode) / (static_cast<double>(n) * dy);
    const Vec3 p{0.0, u.hbar * k, 0.0};
    const PlaneWaveSolution sol = build_spinor(p, mass, branch, index, phi, u);
    fill_mode(grid, sol.amplitude, k);
    return grid;
}

FieldGrid1D make_massless_mode_grid(std::size_t n, double dy, int mode,
                                    [[maybe_unused]] const Units& u) {
    FieldGrid1D grid(n, dy, 0.0);
    const double k = 2.0 * pi * static_cast<double>(mode) / (static_cast<double>(n) * dy);
    // alpha_y eigenvector with eigenvalue -1: phase point moves toward +y
    const Bispinor amp{{cplx(0.0), cplx(1.0), iu, cplx(0.0)}};
    fill_mode(grid, amp * cplx(1.0 / std::sqrt(2.0)), k);
    return grid;
}

FieldGrid1D make_superposition_grid(std::size_t n, double dy, double mass, int mode_a, int mode_b,
                                    const Units& u) {
    FieldGrid1D grid(n, dy, mass * u.c * u.c / u.hbar);
    const double length = static_cast<double>(n) * dy;
    for (int mode : {mode_a, mode_b}) {
        const double k = 2.0 * pi * static_cast<double>(mode) / length;
        const Vec3 p{0.0, u.hbar * k, 0.0};
        const PlaneWaveSolution sol = build_spinor(p, mass, EnergyBranch::positive, 1, 0.0, u);
        for (std::size_t i = 0; i < n; ++i) {
            const double y = static_cast<double>(i) * dy;
            grid.set(i, grid.at(i) + sol.amplitude * std::exp(iu * cplx(k * y)));
        }
    }
    return grid;
}

}  // namespace semiphoton
