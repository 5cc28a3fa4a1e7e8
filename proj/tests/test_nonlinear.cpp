#include <doctest.h>

#include <random>

#include "semiphoton/nonlinear.hpp"
#include "semiphoton/torus.hpp"

using namespace semiphoton;

namespace {

Bispinor random_spinor(std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Bispinor b;
    for (int i = 0; i < 4; ++i) b[i] = cplx(u(rng), u(rng));
    return b;
}

}  // namespace

TEST_CASE("uniform sample self energy is density times volume") {
    EMFieldPoint f;
    f.E = CVec3::from_real({0, 0, 2.0});
    f.H = CVec3::from_real({1.0, 0, 0});
    const double dtau = 3.0;
    const SelfEnergy se = self_energy_integral(f, dtau);
    CHECK(se.eps_s == doctest::Approx(dtau * 5.0 / (8.0 * pi)).epsilon(1e-14));
    // E x H = z x x = y direction, magnitude 2
    CHECK(se.p_s.y == doctest::Approx(dtau * 2.0 / (4.0 * pi)).epsilon(1e-14));
    CHECK(se.p_s.x == 0.0);

    const SelfEnergy zero = self_energy_integral(EMFieldPoint{}, dtau);
    CHECK(zero.eps_s == 0.0);
    CHECK(norm(zero.p_s) == 0.0);

    CHECK_THROWS_AS((void)self_energy_integral(f, 0.0), std::invalid_argument);
}

TEST_CASE("field and bilinear self-energy routes agree on a plane wave") {
    const AlphaSet a = build_alpha_set();
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double dtau = 2.0 * pi * pi * 0.125;

    // energies agree for any complex state
    const Bispinor psi = random_spinor(rng);
    CHECK(self_energy_bilinear(psi, dtau, a).eps_s ==
          doctest::Approx(self_energy_integral(from_bispinor(psi), dtau).eps_s).epsilon(1e-12));

    // momenta agree (up to the documented sign) on real transverse fields
    for (int trial = 0; trial < 50; ++trial) {
        EMFieldPoint f;
        f.E = CVec3::from_real({u(rng), 0.0, u(rng)});
        f.H = CVec3::from_real({u(rng), 0.0, u(rng)});
        const SelfEnergy quantum = self_energy_bilinear(to_bispinor(f), dtau, a);
        const SelfEnergy field = self_energy_integral(f, dtau);
        CHECK(quantum.eps_s == doctest::Approx(field.eps_s).epsilon(1e-12));
        CHECK(std::abs(quantum.p_s.y + field.p_s.y) < 1e-14 * (1.0 + std::abs(field.p_s.y)));
        CHECK(std::abs(quantum.p_s.x) < 1e-14);
        CHECK(std::abs(quantum.p_s.z) < 1e-14);
    }
}

TEST_CASE("mass substitution residual on beta eigenvectors") {
    const AlphaSet a = build_alpha_set();
    const double mass = 1.0;
    const SelfEnergy rest{mass, {}};  // eps_s = m c^2, p_s = 0

    const Bispinor lower{{0, 0, cplx(1.0), 0}};  // beta psi = -psi
    CHECK(mass_substitution_residual(lower, rest, mass, +1, a) < 1e-15);

    const Bispinor upper{{cplx(1.0), 0, 0, 0}};  // beta psi = +psi
    CHECK(mass_substitution_residual(upper, rest, mass, -1, a) < 1e-15);
    // mismatched sign stays away from zero
    CHECK(mass_substitution_residual(upper, rest, mass, +1, a) ==
          doctest::Approx(2.0 * mass).epsilon(1e-12));

    // generic state and self-energy: reported, nonzero
    std::mt19937_64 rng(5);
    const Bispinor generic = random_spinor(rng);
    const SelfEnergy se{0.7, {0.1, -0.4, 0.2}};
    CHECK(mass_substitution_residual(generic, se, mass, +1, a) > 0.0);

    CHECK(mass_substitution_residual(Bispinor{}, se, mass, +1, a) == 0.0);
}

TEST_CASE("nonlinear operator vanishes on the self-consistent plane wave") {
    const AlphaSet a = build_alpha_set();
    NonlinearConfig cfg;

    const NonlinearState moving = make_self_consistent_state(2.0, cfg);
    const double scale = (std::abs(moving.omega) + std::abs(moving.k)) * moving.B.norm();
    CHECK(nonlinear_residual(moving, cfg, a) < 1e-10 * scale);

    // eigenvalue pair equals the self-energy pair
    const SelfEnergy se = self_energy_bilinear(moving.B, cfg.delta_tau_s(), a);
    CHECK(se.eps_s == doctest::Approx(moving.omega).epsilon(1e-12));
    CHECK(se.p_s.y == doctest::Approx(moving.k).epsilon(1e-12));

    const NonlinearState zero{Bispinor{}, 1.0, 1.0};
    CHECK(nonlinear_residual(zero, cfg, a) == 0.0);
}

TEST_CASE("rest-state fixed point reproduces the mass term") {
    const AlphaSet a = build_alpha_set();
    NonlinearConfig cfg;
    const double mass = 1.0;

    // bisection on the amplitude for eps_s(amp) = m c^2, as an independent
    // route to the closed-form amplitude
    const auto eps_of = [&](double amp) {
        const Bispinor b{{0, 0, cplx(amp), 0}};
        return self_energy_bilinear(b, cfg.delta_tau_s(), a).eps_s;
    };
    double lo = 0.0, hi = 100.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (eps_of(mid) < mass ? lo : hi) = mid;
    }
    const double amp_bisect = 0.5 * (lo + hi);

    const NonlinearState rest = make_self_consistent_state(0.0, cfg, mass);
    CHECK(rest.B.norm() == doctest::Approx(amp_bisect).epsilon(1e-10));

    // with eps_s = m c^2 and p_s = 0 the self term acts exactly like the
    // beta mass term on this state
    const SelfEnergy se = self_energy_bilinear(rest.B, cfg.delta_tau_s(), a);
    CHECK(se.eps_s == doctest::Approx(mass).epsilon(1e-12));
    CHECK(norm(se.p_s) < 1e-14);
    CHECK(mass_substitution_residual(rest.B, se, mass, +1, a) < 1e-12 * rest.B.norm());
    CHECK(nonlinear_residual(rest, cfg, a) < 1e-12 * rest.B.norm());
}

TEST_CASE("self term is cubic and linear term linear under amplitude scaling") {
    const AlphaSet a = build_alpha_set();
    NonlinearConfig cfg;
    std::mt19937_64 rng(17);
    NonlinearState st{random_spinor(rng), 1.3, 0.8};

    const Bispinor lin1 = nonlinear_linear_term(st, cfg, a);
    const Bispinor self1 = nonlinear_self_term(st, cfg, a);
    const double lambda = 2.0;
    st.B = st.B * cplx(lambda);
    const Bispinor lin2 = nonlinear_linear_term(st, cfg, a);
    const Bispinor self2 = nonlinear_self_term(st, cfg, a);

    CHECK((lin2 - lin1 * cplx(lambda)).max_abs() < 1e-12 * lin2.max_abs());
    CHECK((self2 - self1 * cplx(lambda * lambda * lambda)).max_abs() <
          1e-12 * self2.max_abs());
}

TEST_CASE("iteration converges in one pass from a fixed point") {
    const AlphaSet a = build_alpha_set();
    NonlinearConfig cfg;
    const NonlinearState st = make_self_consistent_state(1.0, cfg);
    const IterationResult res = iterate_self_consistent(st, cfg, a);
    CHECK(res.converged);
    CHECK(res.iterations == 1);
    CHECK(res.trace.size() == 1);
}

TEST_CASE("iteration converges from a 10 percent perturbation within 50 passes") {
    const AlphaSet a = build_alpha_set();
    NonlinearConfig cfg;
    cfg.max_iters = 50;

    SUBCASE("moving state") {
        NonlinearState st = make_self_consistent_state(2.0, cfg);
        st.B = st.B * cplx(1.1);
        const IterationResult res = iterate_self_consistent(st, cfg, a);
        CHECK(res.converged);
        CHECK(res.iterations <= 50);
        CHECK(res.trace.back().residual <
              1e-9 * (std::abs(res.state.omega) + 1.0) * res.state.B.norm());
    }
    SUBCASE("rest state with target mass") {
        NonlinearState st = make_self_consistent_state(0.0, cfg, 1.0);
        st.B = st.B * cplx(0.9);
        const IterationResult res = iterate_self_consistent(st, cfg, a, 1.0);
        CHECK(res.converged);
        CHECK(res.iterations <= 50);
    }
}

TEST_CASE("tol = 0 runs to max_iters and reports non-convergence") {
    const AlphaSet a = build_alpha_set();
    NonlinearConfig cfg;
    cfg.tol = 0.0;
    cfg.max_iters = 7;
    const NonlinearState st = make_self_consistent_state(1.0, cfg);
    const IterationResult res = iterate_self_consistent(st, cfg, a);
    CHECK_FALSE(res.converged);
    CHECK(res.iterations == 7);
    CHECK(res.trace.size() == 7);
}

TEST_CASE("invalid damping is rejected") {
    const AlphaSet a = build_alpha_set();
    NonlinearConfig cfg;
    cfg.damping = 0.0;
    CHECK_THROWS_AS((void)iterate_self_consistent(make_self_consistent_state(1.0, NonlinearConfig{}),
                                                  cfg, a),
                    std::invalid_argument);
}

TEST_CASE("Dirac-form Lagrangian density vanishes on solutions") {
    const AlphaSet a = build_alpha_set();
    const double mass = 1.0;
    const auto sol = build_spinor({0, 1.5, 0}, mass, EnergyBranch::positive, 1, 0.4);
    const Bispinor psi = sol.amplitude;
    const Bispinor dpsi_dt = psi * cplx(0.0, -sol.energy);
    const Bispinor dpsi_dy = psi * cplx(0.0, sol.momentum.y);

    const cplx L = lagrangian_dirac(psi, dpsi_dt, dpsi_dy, mass, a);
    CHECK(std::abs(L) < 1e-10 * psi.norm2());

    CHECK(std::abs(lagrangian_dirac(Bispinor{}, Bispinor{}, Bispinor{}, mass, a)) == 0.0);

    // non-solution perturbation is visibly nonzero
    const cplx L_off = lagrangian_dirac(psi, dpsi_dt * cplx(1.01), dpsi_dy, mass, a);
    CHECK(std::abs(L_off) > 1e-4 * psi.norm2());
}

TEST_CASE("field-form Lagrangian: static fields keep only the invariant term") {
    EMFieldPoint f;
    f.E = CVec3::from_real({1.0, 0, 0.5});
    f.H = CVec3::from_real({0.2, 0, -0.3});
    const double omega_s = 2.0;
    const SemiphotonLagrangian L = lagrangian_semiphoton(f, EMFieldPoint{}, EMFieldPoint{}, omega_s);
    const double invariant = 1.25 - 0.13;
    CHECK(std::abs(L.field_form - cplx(0.0, -omega_s * invariant / (8.0 * pi))) < 1e-15);
    CHECK(L.form_difference() < 1e-15);

    const SemiphotonLagrangian zero =
        lagrangian_semiphoton(EMFieldPoint{}, EMFieldPoint{}, EMFieldPoint{}, omega_s);
    CHECK(std::abs(zero.field_form) == 0.0);
}

TEST_CASE("field-form Lagrangian vanishes on plane-wave solutions") {
    const AlphaSet a = build_alpha_set();
    (void)a;
    const double mass = 1.0;
    const auto sol = build_spinor({0, 0.9, 0}, mass, EnergyBranch::positive, 2, 0.1);
    const Bispinor psi = sol.amplitude;
    const EMFieldPoint f = from_bispinor(psi);
    const EMFieldPoint df_dt = from_bispinor(psi * cplx(0.0, -sol.energy));
    const EMFieldPoint df_dy = from_bispinor(psi * cplx(0.0, sol.momentum.y));
    const double omega_s = 2.0 * mass;  // natural units

    const SemiphotonLagrangian L = lagrangian_semiphoton(f, df_dt, df_dy, omega_s);
    CHECK(std::abs(L.field_form) < 1e-12 * psi.norm2());
    CHECK(L.form_difference() < 1e-14 * psi.norm2());
}

TEST_CASE("field invariant identity holds for arbitrary real vectors") {
    CHECK(em_identity_check({1, 0, 0}, {0, 1, 0}) == 0.0);
    CHECK(em_identity_check({1, 0, 0}, {1, 0, 0}) == 0.0);
    CHECK(em_identity_check({0, 0, 0}, {0, 0, 0}) == 0.0);

    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Vec3 E{u(rng), u(rng), u(rng)};
        const Vec3 H{u(rng), u(rng), u(rng)};
        const double scale = std::pow(norm2(E) + norm2(H), 2);
        if (scale > 0.0) worst = std::max(worst, em_identity_check(E, H) / scale);
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("quadratic bilinear correlation holds for arbitrary complex spinors") {
    const AlphaSet a = build_alpha_set();
    CHECK(fierz_check(Bispinor{{cplx(1.0), 0, 0, 0}}, a) == 0.0);
    CHECK(fierz_check(Bispinor{}, a) == 0.0);

    std::mt19937_64 rng(88);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Bispinor psi = random_spinor(rng);
        const double scale = psi.norm2() * psi.norm2();
        if (scale > 0.0) worst = std::max(worst, fierz_check(psi, a) / scale);
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("Lagrangian report ties the two self-term routes together") {
    const AlphaSet a = build_alpha_set();
    NonlinearConfig cfg;
    const double mass = 1.0;
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);

    for (int trial = 0; trial < 50; ++trial) {
        // real transverse field state
        EMFieldPoint f;
        f.E = CVec3::from_real({u(rng), 0.0, u(rng)});
        f.H = CVec3::from_real({u(rng), 0.0, u(rng)});
        NonlinearState st{to_bispinor(f), 0.7, 1.1};
        const LagrangianReport rep = lagrangian_nonlinear(st, cfg, mass, a);
        REQUIRE(rep.fields_real);
        const double scale = std::pow(st.B.norm2(), 2) * cfg.delta_tau_s() / (8.0 * pi);
        CHECK(rep.fierz_residual < 1e-12 * std::max(scale, 1.0));
        CHECK(rep.dual_path_residual < 1e-12);
        CHECK(rep.em_identity_residual < 1e-12 * std::max(std::pow(st.B.norm2(), 2), 1.0));
    }

    // complex states still get the quantum-route checks
    NonlinearState complex_state{random_spinor(rng), 0.5, 0.9};
    complex_state.B[0] += cplx(0.0, 0.3);
    const LagrangianReport rep = lagrangian_nonlinear(complex_state, cfg, mass, a);
    const double scale = std::pow(complex_state.B.norm2(), 2) * cfg.delta_tau_s() / (8.0 * pi);
    CHECK(rep.fierz_residual < 1e-12 * std::max(scale, 1.0));

    const LagrangianReport zero = lagrangian_nonlinear(NonlinearState{}, cfg, mass, a);
    CHECK(std::abs(zero.L_nonlinear_quantum) == 0.0);
    CHECK(zero.fierz_residual == 0.0);
}

TEST_CASE("cubic self-term coefficient against the weak-field coefficient") {
    // natural units: closed forms collapse to pure numbers
    const PhotonPhotonComparison nat = photon_photon_coefficient_compare(1.0, 1.0, 1.0, 1.0);
    CHECK(nat.c_n == doctest::Approx(1.0 / 256.0).epsilon(1e-14));
    CHECK(nat.c_n_closed_form == doctest::Approx(1.0 / 256.0).epsilon(1e-14));
    CHECK(nat.ratio_closed_form == doctest::Approx(45.0 / 512.0).epsilon(1e-14));
    CHECK(nat.inner_coeff_cubic == 4);
    CHECK(nat.inner_coeff_weak_field == 7);

    // CGS: the ratio reduces to (45/512)(hbar c / e^2)^2
    const PhysicalConstants k;
    const PhotonPhotonComparison cgs =
        photon_photon_coefficient_compare(k.hbar, k.c, k.m_e, k.e);
    CHECK(cgs.c_n == doctest::Approx(cgs.c_n_closed_form).epsilon(1e-12));
    CHECK(cgs.ratio == doctest::Approx(cgs.ratio_closed_form).epsilon(1e-12));
    const double inv_alpha = k.hbar * k.c / (k.e * k.e);
    CHECK(cgs.ratio_closed_form ==
          doctest::Approx((45.0 / 512.0) * inv_alpha * inv_alpha).epsilon(1e-12));
}

TEST_CASE("cubic prefactor audit: printed versus derived differ by hbar/c") {
    const PhysicalConstants k;
    const CubicCoefficientAudit audit = cubic_coefficient_audit(k.hbar, k.c, k.m_e);
    CHECK(audit.ratio == doctest::Approx(k.hbar / k.c).epsilon(1e-12));

    // identical in natural units
    const CubicCoefficientAudit nat = cubic_coefficient_audit(1.0, 1.0, 1.0);
    CHECK(nat.printed == doctest::Approx(nat.derived).epsilon(1e-14));
}
