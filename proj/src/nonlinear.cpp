#include "semiphoton/nonlinear.hpp"

#include <stdexcept>

#include "semiphoton/kernels.hpp"

namespace semiphoton {

SelfEnergy self_energy_integral(const EMFieldPoint& f, double volume, const Units& u) {
    if (volume <= 0.0) throw std::invalid_argument("self_energy_integral: volume must be > 0");
    SelfEnergy se;
    const double U = (abs2(f.E) + abs2(f.H)) / (8.0 * pi);
    const CVec3 exh = cross(CVec3{std::conj(f.E.x), std::conj(f.E.y), std::conj(f.E.z)}, f.H);
    const Vec3 g = Vec3{exh.x.real(), exh.y.real(), exh.z.real()} / (4.0 * pi * u.c);
    se.eps_s = U * volume;
    se.p_s = g * volume;
    return se;
}

SelfEnergy self_energy_integral(const FieldGrid1D& grid, double cross_section, const Units& u) {
    if (cross_section <= 0.0)
        throw std::invalid_argument("self_energy_integral: cross section must be > 0");
    SelfEnergy total;
    const double dv = cross_section * grid.dy;
    for (std::size_t i = 0; i < grid.n; ++i) {
        const SelfEnergy point = self_energy_integral(from_bispinor(grid.at(i)), dv, u);
        total.eps_s += point.eps_s;
        total.p_s = total.p_s + point.p_s;
    }
    return total;
}

SelfEnergy self_energy_bilinear(const Bispinor& psi, double delta_tau, const AlphaSet& a,
                                const Units& u) {
    SelfEnergy se;
    const double scale = delta_tau / (8.0 * pi);
    se.eps_s = scale * bilinear(psi, a.alpha0).real();
    se.p_s = Vec3{bilinear(psi, a.alpha1).real(), bilinear(psi, a.alpha2).real(),
                  bilinear(psi, a.alpha3).real()} *
             (-scale / u.c);
    return se;
}

double mass_substitution_residual(const Bispinor& psi, const SelfEnergy& se, double mass, int sign,
                                  const AlphaSet& a, const Units& u) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("mass_substitution_residual: sign must be +1 or -1");
    const double s = static_cast<double>(sign);
    const double c = u.c;
    Bispinor r = psi * cplx(se.eps_s);
    r = r + apply(a.alpha1, psi) * cplx(s * c * se.p_s.x);
    r = r + apply(a.alpha2, psi) * cplx(s * c * se.p_s.y);
    r = r + apply(a.alpha3, psi) * cplx(s * c * se.p_s.z);
    r = r + apply(a.alpha4, psi) * cplx(s * mass * c * c);
    return r.norm();
}

namespace {

Bispinor alpha_dot(const Vec3& v, const Bispinor& psi, const AlphaSet& a) {
    return apply(a.alpha1, psi) * cplx(v.x) + apply(a.alpha2, psi) * cplx(v.y) +
           apply(a.alpha3, psi) * cplx(v.z);
}

}  // namespace

Bispinor nonlinear_linear_term(const NonlinearState& st, const NonlinearConfig& cfg,
                               const AlphaSet& a) {
    const Units& u = cfg.units;
    const double eps = u.hbar * st.omega;
    const Vec3 p{0.0, u.hbar * st.k, 0.0};
    return st.B * cplx(eps) + alpha_dot(p * u.c, st.B, a);
}

Bispinor nonlinear_self_term(const NonlinearState& st, const NonlinearConfig& cfg,
                             const AlphaSet& a) {
    const Units& u = cfg.units;
    const SelfEnergy se = self_energy_bilinear(st.B, cfg.delta_tau_s(), a, u);
    return (st.B * cplx(se.eps_s) + alpha_dot(se.p_s * u.c, st.B, a)) * cplx(-1.0);
}

Bispinor nonlinear_operator(const NonlinearState& st, const NonlinearConfig& cfg,
                            const AlphaSet& a) {
    return nonlinear_linear_term(st, cfg, a) + nonlinear_self_term(st, cfg, a);
}

double nonlinear_residual(const NonlinearState& st, const NonlinearConfig& cfg,
                          const AlphaSet& a) {
    return nonlinear_operator(st, cfg, a).norm();
}

namespace {

// alpha_y eigenspaces: lambda = +1 is spanned by (1,0,0,i)/sqrt2 and
// (0,1,-i,0)/sqrt2; conjugating the imaginary entries gives lambda = -1.
Bispinor alpha_y_project(const Bispinor& b, double lambda) {
    const double s = 1.0 / std::sqrt(2.0);
    const cplx q = lambda > 0 ? iu : -iu;
    const Bispinor e1{{cplx(s), 0.0, 0.0, q * s}};
    const Bispinor e2{{0.0, cplx(s), -q * s, 0.0}};
    return e1 * inner(e1, b) + e2 * inner(e2, b);
}

Bispinor beta_lower_project(const Bispinor& b) {
    return Bispinor{{0.0, 0.0, b[2], b[3]}};
}

}  // namespace

NonlinearState make_self_consistent_state(double k, const NonlinearConfig& cfg,
                                          double target_mass) {
    const Units& u = cfg.units;
    NonlinearState st;
    st.k = k;
    double eps_target;
    Bispinor direction;
    if (k != 0.0) {
        eps_target = u.c * u.hbar * std::abs(k);
        const double lambda = k > 0.0 ? -1.0 : 1.0;  // branch with eps = +c hbar |k|
        const double s = 1.0 / std::sqrt(2.0);
        direction = Bispinor{{0.0, cplx(s), (lambda > 0 ? -iu : iu) * s, 0.0}};
    } else {
        if (target_mass <= 0.0)
            throw std::invalid_argument("make_self_consistent_state: k = 0 needs target_mass > 0");
        eps_target = target_mass * u.c * u.c;
        direction = Bispinor{{0.0, 0.0, cplx(1.0), 0.0}};
    }
    const double amp = std::sqrt(8.0 * pi * eps_target / cfg.delta_tau_s());
    st.B = direction * cplx(amp);
    st.omega = eps_target / u.hbar;
    return st;
}

IterationResult iterate_self_consistent(const NonlinearState& initial, const NonlinearConfig& cfg,
                                        const AlphaSet& a, double target_mass) {
    if (cfg.damping <= 0.0 || cfg.damping > 1.0)
        throw std::invalid_argument("iterate_self_consistent: damping must be in (0, 1]");
    const Units& u = cfg.units;
    const double dtau = cfg.delta_tau_s();

    const bool moving = initial.k != 0.0;
    if (!moving && target_mass <= 0.0)
        throw std::invalid_argument("iterate_self_consistent: k = 0 needs target_mass > 0");
    const double lambda = initial.k > 0.0 ? -1.0 : 1.0;

    IterationResult res;
    res.state = initial;

    for (int it = 1; it <= cfg.max_iters; ++it) {
        NonlinearState& st = res.state;

        // (eps_s, p_s) of the current iterate
        const SelfEnergy se = self_energy_bilinear(st.B, dtau, a, u);

        // re-solve the linearized eigenproblem: project onto the solution
        // subspace and take the branch energy
        Bispinor dir = moving ? alpha_y_project(st.B, lambda) : beta_lower_project(st.B);
        double eps_next;
        if (moving) {
            // massless branch eps = eps_s - lambda c (hbar k - p_s.y); equals
            // c hbar |k| on the eigenspace
            eps_next = se.eps_s - lambda * u.c * (u.hbar * st.k - se.p_s.y);
        } else {
            eps_next = target_mass * u.c * u.c;
        }
        if (dir.norm() == 0.0)
            dir = moving ? Bispinor{{0.0, cplx(1.0), (lambda > 0 ? -iu : iu), 0.0}}
                         : Bispinor{{0.0, 0.0, cplx(1.0), 0.0}};
        const double amp = std::sqrt(8.0 * pi * std::abs(eps_next) / dtau);
        const Bispinor target = dir * cplx(amp / dir.norm());

        // damped mix
        const Bispinor prev = st.B;
        st.B = prev + (target - prev) * cplx(cfg.damping);
        st.omega = eps_next / u.hbar;

        const SelfEnergy se_new = self_energy_bilinear(st.B, dtau, a, u);
        IterTraceRow row;
        row.iter = it;
        row.eps_s = se_new.eps_s;
        row.p_s_norm = norm(se_new.p_s);
        row.residual = nonlinear_residual(st, cfg, a);
        res.trace.push_back(row);
        res.iterations = it;

        const double change = (st.B - prev).max_abs();
        const double scale = std::max(st.B.max_abs(), 1e-300);
        if (change < cfg.tol * scale) {
            res.converged = true;
            break;
        }
    }
    return res;
}

cplx lagrangian_dirac(const Bispinor& psi, const Bispinor& dpsi_dt, const Bispinor& dpsi_dy,
                      double mass, const AlphaSet& a, const Units& u) {
    const cplx t1 = inner(psi, dpsi_dt) / u.c;
    const cplx t2 = inner(psi, apply(a.alpha2, dpsi_dy));
    const cplx t3 = iu * (mass * u.c / u.hbar) * bilinear(psi, a.alpha4);
    return t1 - t2 - t3;
}

SemiphotonLagrangian lagrangian_semiphoton(const EMFieldPoint& f, const EMFieldPoint& df_dt,
                                           const EMFieldPoint& df_dy, double omega_s,
                                           const Units& u) {
    // sesquilinear transcription of the Dirac-form density, scaled so the
    // first term is dU/dt for real fields
    const cplx udot = (herm_dot(f.E, df_dt.E) + herm_dot(f.H, df_dt.H)) / (4.0 * pi);
    const CVec3 e_conj{std::conj(f.E.x), std::conj(f.E.y), std::conj(f.E.z)};
    const CVec3 h_conj{std::conj(f.H.x), std::conj(f.H.y), std::conj(f.H.z)};
    const cplx div_s = (u.c / (4.0 * pi)) * (cross(e_conj, df_dy.H).y + cross(df_dy.E, h_conj).y);
    const cplx invariant = herm_dot(f.E, f.E) - herm_dot(f.H, f.H);

    SemiphotonLagrangian L;
    L.field_form = udot - div_s - iu * (omega_s / (8.0 * pi)) * invariant;

    // current form: -(1/2)(j_e . E* - j_m . H*) with j = i (w_s/4pi) (E, H)
    const CVec3 j_e = f.E * cplx(0.0, omega_s / (4.0 * pi));
    const CVec3 j_m = f.H * cplx(0.0, omega_s / (4.0 * pi));
    const cplx current = herm_dot(f.E, j_e) - herm_dot(f.H, j_m);
    L.current_form = udot - div_s - 0.5 * current;
    return L;
}

GridLagrangian lagrangian_semiphoton(const FieldGrid1D& a, const FieldGrid1D& b, const Units& u) {
    if (a.n != b.n || a.mass_omega != b.mass_omega)
        throw std::invalid_argument("lagrangian_semiphoton: mismatched grids");
    const double dt = b.time - a.time;
    if (dt == 0.0) throw std::invalid_argument("lagrangian_semiphoton: grids must be dt apart");
    const std::size_t n = a.n;
    const double omega_s = 2.0 * a.mass_omega;

    // midpoint state and its stencil derivative, component-wise
    std::array<std::vector<cplx>, 4> mid, dmid;
    for (std::size_t c = 0; c < 4; ++c) {
        mid[c].resize(n);
        dmid[c].resize(n);
        for (std::size_t i = 0; i < n; ++i) mid[c][i] = 0.5 * (a.comp[c][i] + b.comp[c][i]);
        kernels::scalar_ops().cdiff4(mid[c].data(), dmid[c].data(), n, 1.0 / (12.0 * a.dy));
    }

    GridLagrangian out;
    for (std::size_t i = 0; i < n; ++i) {
        Bispinor psi, dpsi_dt, dpsi_dy;
        for (std::size_t c = 0; c < 4; ++c) {
            psi[static_cast<int>(c)] = mid[c][i];
            dpsi_dt[static_cast<int>(c)] = (b.comp[c][i] - a.comp[c][i]) / dt;
            dpsi_dy[static_cast<int>(c)] = dmid[c][i];
        }
        const SemiphotonLagrangian L =
            lagrangian_semiphoton(from_bispinor(psi), from_bispinor(dpsi_dt),
                                  from_bispinor(dpsi_dy), omega_s, u);
        out.max_field_form = std::max(out.max_field_form, std::abs(L.field_form));
        out.max_form_difference = std::max(out.max_form_difference, L.form_difference());
    }
    return out;
}

double em_identity_check(const Vec3& E, const Vec3& H) {
    const double lhs = (norm2(E) + norm2(H)) * (norm2(E) + norm2(H)) - 4.0 * norm2(cross(E, H));
    const double rhs = (norm2(E) - norm2(H)) * (norm2(E) - norm2(H)) + 4.0 * dot(E, H) * dot(E, H);
    return std::abs(lhs - rhs);
}

double fierz_check(const Bispinor& psi, const AlphaSet& a) {
    const double b0 = bilinear(psi, a.alpha0).real();
    const double b1 = bilinear(psi, a.alpha1).real();
    const double b2 = bilinear(psi, a.alpha2).real();
    const double b3 = bilinear(psi, a.alpha3).real();
    const double b4 = bilinear(psi, a.alpha4).real();
    const double b5 = bilinear(psi, a.alpha5).real();
    return std::abs(b0 * b0 - b1 * b1 - b2 * b2 - b3 * b3 - b4 * b4 - b5 * b5);
}

LagrangianReport lagrangian_nonlinear(const NonlinearState& st, const NonlinearConfig& cfg,
                                      double mass, const AlphaSet& a) {
    const Units& u = cfg.units;
    const double dtau = cfg.delta_tau_s();
    const Bispinor& psi = st.B;
    const Bispinor dpsi_dt = psi * cplx(0.0, -st.omega);
    const Bispinor dpsi_dy = psi * cplx(0.0, st.k);

    LagrangianReport rep;
    rep.L_dirac = lagrangian_dirac(psi, dpsi_dt, dpsi_dy, mass, a, u);

    const EMFieldPoint f = from_bispinor(psi);
    const EMFieldPoint f_t = from_bispinor(dpsi_dt);
    const EMFieldPoint f_y = from_bispinor(dpsi_dy);
    const double omega_s = 2.0 * mass * u.c * u.c / u.hbar;
    rep.L_semi_photon = lagrangian_semiphoton(f, f_t, f_y, omega_s, u).field_form;

    const double b0 = bilinear(psi, a.alpha0).real();
    const double b1 = bilinear(psi, a.alpha1).real();
    const double b2 = bilinear(psi, a.alpha2).real();
    const double b3 = bilinear(psi, a.alpha3).real();
    const double b4 = bilinear(psi, a.alpha4).real();
    const double b5 = bilinear(psi, a.alpha5).real();

    const double self_q = (dtau / (8.0 * pi)) * (b0 * b0 - b1 * b1 - b2 * b2 - b3 * b3);
    const double self_45 = (dtau / (8.0 * pi)) * (b4 * b4 + b5 * b5);
    rep.fierz_residual = std::abs(self_q - self_45);

    const cplx kinetic_q = inner(psi, dpsi_dt) / u.c + inner(psi, apply(a.alpha2, dpsi_dy));
    rep.L_nonlinear_quantum = kinetic_q + self_q;

    rep.fields_real = f.is_real(1e-12 * (std::sqrt(abs2(f.E)) + std::sqrt(abs2(f.H))));
    if (rep.fields_real) {
        const Vec3 E = f.E.real();
        const Vec3 H = f.H.real();
        const double i1 = norm2(E) - norm2(H);
        const double edh = dot(E, H);
        const double mc2 = mass * u.c * u.c;
        const double self_em = (dtau / (64.0 * pi * pi * mc2)) * (i1 * i1 + 4.0 * edh * edh);
        rep.L_nonlinear_em = cplx(i1 / (8.0 * pi) + self_em);
        rep.em_identity_residual = em_identity_check(E, H);
        // b0^2 = (E^2+H^2)^2 bounds the self term, so it is a safe scale
        const double scale = std::max((dtau / (8.0 * pi)) * b0 * b0, 1e-300);
        rep.dual_path_residual = std::abs(self_q - 8.0 * pi * mc2 * self_em) / scale;
    }
    return rep;
}

PhotonPhotonComparison photon_photon_coefficient_compare(double hbar, double c, double m_e,
                                                         double e) {
    PhotonPhotonComparison r;
    const double r_s = hbar / (2.0 * m_e * c);
    const double dtau_s = 2.0 * pi * pi * r_s * r_s * r_s;
    const double mc2 = m_e * c * c;
    r.c_n = dtau_s / (64.0 * pi * pi * mc2);
    r.c_n_closed_form = hbar * hbar * hbar / (256.0 * std::pow(m_e, 4) * std::pow(c, 5));
    r.b = (2.0 / 45.0) * std::pow(e, 4) * hbar / (std::pow(m_e, 4) * std::pow(c, 7));
    r.ratio = r.c_n / r.b;
    r.ratio_closed_form = (45.0 / 512.0) * std::pow(hbar * c / (e * e), 2);
    r.note =
        "self-term coefficient vs weak-field photon-photon coefficient; agreement is in form "
        "only, the numeric ratio is (45/512)(hbar c / e^2)^2 and the (E.H)^2 inner coefficients "
        "differ (4 vs 7)";
    return r;
}

CubicCoefficientAudit cubic_coefficient_audit(double hbar, double c, double m_e) {
    CubicCoefficientAudit audit;
    const double alpha_q = 2.0 / pi;
    const double r_s = hbar / (2.0 * m_e * c);
    const double r_s3 = r_s * r_s * r_s;
    audit.printed = r_s3 / (2.0 * alpha_q * c);
    audit.derived = 2.0 * pi * pi * r_s3 / (8.0 * pi * hbar);  // dtau_s / (8 pi hbar)
    audit.ratio = audit.printed / audit.derived;
    audit.note =
        "printed cubic prefactor r_s^3/(2 a_q c) is dimensionally short by hbar/c against the "
        "derived dtau_s/(8 pi hbar) = r_s^3/(2 a_q hbar); identical in natural units";
    return audit;
}

}  // namespace semiphoton
