#include <doctest.h>

#include <cmath>

#include "semiphoton/evolution.hpp"
#include "semiphoton/ring.hpp"

using namespace semiphoton;

namespace {

double max_state_diff(const FieldGrid1D& a, const FieldGrid1D& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.n; ++i) m = std::max(m, (a.at(i) - b.at(i)).max_abs());
    return m;
}

FieldGrid1D run_steps(FieldGrid1D grid, const EvolutionConfig& cfg) {
    Rk4Stepper stepper(grid.n, cfg.spatial, cfg.units);
    for (std::size_t s = 0; s < cfg.steps; ++s) stepper.step(grid, cfg.dt);
    return grid;
}

}  // namespace

TEST_CASE("grid constructor enforces the lattice contract") {
    CHECK_THROWS_AS(FieldGrid1D(4, 0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(FieldGrid1D(16, 0.0, 1.0), std::invalid_argument);
    const FieldGrid1D g(16, 0.25, 1.0);
    CHECK(g.length() == 4.0);
}

TEST_CASE("zero state is a fixed point") {
    FieldGrid1D grid(32, 0.1, 1.0);
    EvolutionConfig cfg;
    cfg.dt = 0.01;
    const FieldGrid1D out = step(grid, cfg);
    for (std::size_t i = 0; i < out.n; ++i) CHECK(out.at(i).max_abs() == 0.0);
    CHECK(out.time == 0.01);
}

TEST_CASE("CFL violation is refused with a suggested step") {
    FieldGrid1D grid(32, 0.1, 1.0);
    EvolutionConfig cfg;
    cfg.dt = 0.2;  // c dt / dy = 2
    CHECK_THROWS_AS((void)step(grid, cfg), CflViolation);
    try {
        (void)step(grid, cfg);
    } catch (const CflViolation& e) {
        CHECK(e.suggested_dt == doctest::Approx(0.05));
    }
    cfg.cfl_limit = 0.9;  // cap stays at 0.5
    CHECK_THROWS_AS((void)step(grid, cfg), CflViolation);
}

TEST_CASE("massless mode returns to itself after one period (spectral)") {
    const std::size_t n = 256;
    const double dy = 2.0 * pi / static_cast<double>(n);
    const FieldGrid1D initial = make_massless_mode_grid(n, dy, 2);

    EvolutionConfig cfg;
    cfg.spatial = SpatialScheme::spectral;
    cfg.dt = 0.25 * dy;          // CFL 0.25
    cfg.steps = 4 * n;           // exactly one period L/c
    const FieldGrid1D out = run_steps(initial, cfg);
    CHECK(max_state_diff(out, initial) < 1e-8);
}

TEST_CASE("massless mode period return under the 4th-order stencil") {
    const std::size_t n = 256;
    const double dy = 2.0 * pi / static_cast<double>(n);
    const FieldGrid1D initial = make_massless_mode_grid(n, dy, 2);

    EvolutionConfig cfg;
    cfg.dt = 0.25 * dy;
    cfg.steps = 4 * n;
    const FieldGrid1D out = run_steps(initial, cfg);
    // stencil dispersion allows a small phase slip at this resolution
    CHECK(max_state_diff(out, initial) < 1e-5);
}

TEST_CASE("eigenstate advances by e^{-i eps dt} with constant amplitude") {
    const std::size_t n = 256;
    const double dy = 2.0 * pi / static_cast<double>(n);
    const double mass = 1.0;
    const FieldGrid1D initial = make_eigenstate_grid(n, dy, mass, 1, EnergyBranch::positive, 1);
    const double k = 2.0 * pi / initial.length();
    const double eps = std::sqrt(k * k + mass * mass);

    SUBCASE("spectral derivative") {
        EvolutionConfig cfg;
        cfg.spatial = SpatialScheme::spectral;
        cfg.dt = 0.125 * dy;
        FieldGrid1D out = run_steps(initial, cfg);
        double worst = 0.0;
        const cplx phase = std::exp(-iu * cplx(eps * cfg.dt));
        for (std::size_t i = 0; i < n; ++i)
            worst = std::max(worst, (out.at(i) - initial.at(i) * phase).max_abs());
        CHECK(worst < 1e-12);
    }
    SUBCASE("4th-order stencil") {
        EvolutionConfig cfg;
        cfg.dt = 0.125 * dy;
        FieldGrid1D out = run_steps(initial, cfg);
        double worst = 0.0;
        const cplx phase = std::exp(-iu * cplx(eps * cfg.dt));
        for (std::size_t i = 0; i < n; ++i)
            worst = std::max(worst, (out.at(i) - initial.at(i) * phase).max_abs());
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("norm and energy are conserved over long eigenstate runs") {
    const std::size_t n = 256;
    const double dy = 2.0 * pi / static_cast<double>(n);
    FieldGrid1D grid = make_eigenstate_grid(n, dy, 1.0, 1, EnergyBranch::positive, 1);
    const double norm0 = total_norm(grid);
    const double energy0 = total_energy(grid);

    EvolutionConfig cfg;
    cfg.dt = 0.25 * dy;
    Rk4Stepper stepper(n, cfg.spatial, cfg.units);
    for (int s = 0; s < 250; ++s) stepper.step(grid, cfg.dt);

    CHECK(std::abs(total_norm(grid) - norm0) < 1e-8 * norm0);
    CHECK(std::abs(total_energy(grid) - energy0) < 1e-6 * energy0);
}

TEST_CASE("continuity residual of an evolved eigenstate stays at roundoff scale") {
    const std::size_t n = 256;
    const double dy = 2.0 * pi / static_cast<double>(n);
    const FieldGrid1D a = make_eigenstate_grid(n, dy, 1.0, 1, EnergyBranch::positive, 1);
    EvolutionConfig cfg;
    cfg.dt = 0.25 * dy;
    const FieldGrid1D b = step(a, cfg);
    const double p_scale = probability_density(a)[0];
    CHECK(continuity_residual(a, b) < 1e-6 * p_scale / dy);
}

TEST_CASE("static zero state has zero continuity residual") {
    FieldGrid1D a(32, 0.1, 1.0);
    FieldGrid1D b = a;
    b.time = 0.01;
    CHECK(continuity_residual(a, b) == 0.0);
}

TEST_CASE("continuity residual drops by at least 8x when dy and dt halve") {
    // documented pairing: 4th-order stencil + centered time difference at low
    // CFL, superposition state so the spatial term dominates
    const double length = 2.0 * pi;
    const auto residual_at = [&](std::size_t n) {
        const double dy = length / static_cast<double>(n);
        const FieldGrid1D a = make_superposition_grid(n, dy, 1.0, 1, 3);
        EvolutionConfig cfg;
        cfg.dt = 0.05 * dy;
        const FieldGrid1D b = step(a, cfg);
        return continuity_residual(a, b);
    };
    const double coarse = residual_at(32);
    const double fine = residual_at(64);
    CHECK(coarse / fine >= 8.0);
}

TEST_CASE("field-form equations agree with the bispinor dynamics pointwise") {
    const std::size_t n = 64;
    const double dy = 2.0 * pi / static_cast<double>(n);

    SUBCASE("massive eigenstate") {
        const FieldGrid1D g = make_eigenstate_grid(n, dy, 1.0, 2, EnergyBranch::positive, 1);
        CHECK(maxwell_current_residual(g).relative() < 1e-10);
    }
    SUBCASE("massless state reduces to the current-free equations") {
        const FieldGrid1D g = make_massless_mode_grid(n, dy, 1);
        CHECK(maxwell_current_residual(g).relative() < 1e-10);
    }
    SUBCASE("negative branch superposition") {
        const FieldGrid1D g = make_eigenstate_grid(n, dy, 0.7, 3, EnergyBranch::negative, 2);
        CHECK(maxwell_current_residual(g).relative() < 1e-10);
    }
    SUBCASE("zero field") {
        const FieldGrid1D g(n, dy, 1.0);
        CHECK(maxwell_current_residual(g).max_mismatch == 0.0);
    }
}

TEST_CASE("stress tensor components") {
    EMFieldPoint f;
    f.E = CVec3::from_real({0, 0, 1});
    const StressTensor t = stress_tensor(f);
    CHECK(t.tau00 == 0.5);
    CHECK(t.tau[2][2] == -0.5);
    CHECK(t.tau[0][0] == 0.5);
    CHECK(t.tau[1][1] == 0.5);
    CHECK(t.tau[0][2] == 0.0);
    CHECK(norm(t.tau_i0) == 0.0);

    const StressTensor zero = stress_tensor(EMFieldPoint{});
    CHECK(zero.tau00 == 0.0);

    // symmetry on a generic field
    EMFieldPoint g;
    g.E = CVec3::from_real({0.3, -1.2, 0.8});
    g.H = CVec3::from_real({-0.5, 0.9, 2.0});
    const StressTensor s = stress_tensor(g);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(s.tau[i][j] == s.tau[j][i]);
}

TEST_CASE("spinning force components") {
    const SpinningForce oz = spinning_force(1.0, 1.0, 1.0, SpinAxis::oz);
    CHECK(oz.f2 == doctest::Approx(1.0 / (4.0 * pi)).epsilon(1e-15));
    CHECK(oz.f0 == doctest::Approx(1.0 / (4.0 * pi)).epsilon(1e-15));

    const SpinningForce ox = spinning_force(1.0, 1.0, 1.0, SpinAxis::ox);
    CHECK(ox.f2 == doctest::Approx(-1.0 / (4.0 * pi)).epsilon(1e-15));

    // no curvature, no supplementary force
    const SpinningForce straight = spinning_force(1.0, 1.0, 0.0, SpinAxis::oz);
    CHECK(straight.f2 == 0.0);
    CHECK(straight.f0 == 0.0);

    CHECK(spinning_force(0.0, 0.0, 1.0, SpinAxis::oz).f2 == 0.0);
}

TEST_CASE("transverse Lorentz force components vanish for y-propagating states") {
    const std::size_t n = 64;
    const double dy = 2.0 * pi / static_cast<double>(n);
    const FieldGrid1D a = make_superposition_grid(n, dy, 1.0, 1, 2);
    EvolutionConfig cfg;
    cfg.dt = 0.25 * dy;
    const FieldGrid1D b = step(a, cfg);
    const LorentzForceDiag d = lorentz_force(a, b);
    CHECK(d.f1_max == 0.0);
    CHECK(d.f3_max == 0.0);
    // f0, f2 are finite diagnostics, not asserted values
    CHECK(std::isfinite(d.f0_max));
    CHECK(std::isfinite(d.f2_max));
}

TEST_CASE("rigid rotation reproduces the centripetal identity") {
    const RingField ring = rigid_rotation_ring(2.0, 1.5);
    const RingDiagnostics d = lamb_residual(ring, 1.0, 256);
    CHECK(d.centripetal_residual < 1e-3);
    // balanced pressure profile satisfies the motion statement
    CHECK(d.relative() < 1e-12);
}

TEST_CASE("static uniform configuration has zero residual") {
    const RingDiagnostics d = lamb_residual(uniform_static_ring(3.0), 1.0, 64);
    CHECK(d.lamb_residual == 0.0);
    CHECK(d.centripetal_residual == 0.0);
}

TEST_CASE("ring residual converges at 2nd order in the sample count") {
    // balanced in the continuum (dU/dr = 2 sin 2r = v x rot g radially), with
    // curvature the stencil resolves only approximately
    RingField f;
    f.U = [](double r, double) { return -std::cos(2.0 * r); };
    f.g = [](double r, double th) { return r * Vec3{-std::sin(th), std::cos(th), 0.0}; };
    f.v = [](double r, double th) {
        return std::sin(2.0 * r) * Vec3{-std::sin(th), std::cos(th), 0.0};
    };
    const double coarse = lamb_residual(f, 1.0, 64).lamb_residual;
    const double fine = lamb_residual(f, 1.0, 128).lamb_residual;
    CHECK(coarse > 0.0);
    CHECK(coarse / fine > 3.0);
    CHECK(coarse / fine < 5.0);
}

TEST_CASE("ring sampling below 16 points is rejected") {
    CHECK_THROWS_AS((void)lamb_residual(uniform_static_ring(1.0), 1.0, 8), std::invalid_argument);
}
