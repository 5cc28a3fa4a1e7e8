#include <doctest.h>

#include <random>

#include "semiphoton/bispinor.hpp"
#include "semiphoton/evolution.hpp"

using namespace semiphoton;

namespace {

EMFieldPoint real_field(const Vec3& E, const Vec3& H) {
    return {CVec3::from_real(E), CVec3::from_real(H)};
}

EMFieldPoint random_transverse(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return real_field({u(rng), 0.0, u(rng)}, {u(rng), 0.0, u(rng)});
}

}  // namespace

TEST_CASE("field packing places components as (E_z, E_x, iH_z, iH_x)") {
    const Bispinor a = to_bispinor(real_field({0, 0, 1}, {0, 0, 0}));
    CHECK(a[0] == cplx(1.0));
    CHECK(a[1] == cplx(0.0));
    CHECK(a[2] == cplx(0.0));
    CHECK(a[3] == cplx(0.0));

    const Bispinor b = to_bispinor(real_field({0, 0, 0}, {0, 0, 1}));
    CHECK(b[2] == iu);
    CHECK(b[0] == cplx(0.0));

    const Bispinor c = to_bispinor(real_field({1, 0, 2}, {3, 0, 4}));
    CHECK(c[0] == cplx(2.0));
    CHECK(c[1] == cplx(1.0));
    CHECK(c[2] == cplx(0.0, 4.0));
    CHECK(c[3] == cplx(0.0, 3.0));
}

TEST_CASE("non-transverse input is rejected") {
    CHECK_THROWS_AS((void)to_bispinor(real_field({0, 1, 0}, {0, 0, 0})), std::invalid_argument);
    CHECK_THROWS_AS((void)to_bispinor(real_field({0, 0, 0}, {0, 0.5, 0})), std::invalid_argument);
}

TEST_CASE("from_bispinor inverts to_bispinor exactly") {
    CHECK(from_bispinor(Bispinor{{cplx(1), 0, 0, 0}}).E.z == cplx(1.0));
    CHECK(from_bispinor(Bispinor{{0, 0, iu, 0}}).H.z == cplx(1.0));

    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        Bispinor psi;
        for (int i = 0; i < 4; ++i) psi[i] = cplx(u(rng), u(rng));
        const Bispinor back = to_bispinor(from_bispinor(psi));
        for (int i = 0; i < 4; ++i) CHECK(back[i] == psi[i]);
    }
}

TEST_CASE("bilinear with beta gives E^2 - H^2 on basis states") {
    const AlphaSet a = build_alpha_set();
    CHECK(bilinear(Bispinor{{cplx(1), 0, 0, 0}}, a.alpha4) == cplx(1.0));
    CHECK(bilinear(Bispinor{{0, 0, iu, 0}}, a.alpha4) == cplx(-1.0));
    CHECK(bilinear(Bispinor{}, a.alpha4) == cplx(0.0));
}

TEST_CASE("invariant report on reference fields") {
    const InvariantReport r = invariant_report(real_field({0, 0, 1}, {0, 0, 0}));
    CHECK(r.I1 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.pseudoscalar == 0.0);
    CHECK(r.U == doctest::Approx(1.0 / (8.0 * pi)).epsilon(1e-15));
    CHECK(norm(r.S) == 0.0);

    const InvariantReport parallel = invariant_report(real_field({1, 0, 0}, {1, 0, 0}));
    CHECK(parallel.I1 == 0.0);
    CHECK(parallel.pseudoscalar == doctest::Approx(2.0).epsilon(1e-15));

    const InvariantReport zero = invariant_report(real_field({0, 0, 0}, {0, 0, 0}));
    CHECK(zero.I1 == 0.0);
    CHECK(zero.U == 0.0);
    CHECK(norm(zero.g) == 0.0);
}

TEST_CASE("Poynting vector and momentum density scale as S = c/4pi E x H, g = S/c^2") {
    const InvariantReport r = invariant_report(real_field({0, 0, 1}, {1, 0, 0}));
    // E x H = z x x = y
    CHECK(r.S.y == doctest::Approx(1.0 / (4.0 * pi)).epsilon(1e-15));
    CHECK(r.g.y == doctest::Approx(1.0 / (4.0 * pi)).epsilon(1e-15));
    CHECK(r.S.x == 0.0);
    CHECK(r.S.z == 0.0);
}

TEST_CASE("bilinears reproduce the field invariants at a crossed-field point") {
    const AlphaSet a = build_alpha_set();
    const BilinearFieldResiduals r =
        bilinear_vs_field_check(real_field({0, 0, 1}, {1, 0, 0}), a);
    CHECK(r.scalar == 0.0);
    CHECK(r.density == 0.0);
    CHECK(r.flux == 0.0);
    CHECK(r.pseudoscalar == 0.0);
}

TEST_CASE("bilinear-field correspondence over 1000 random transverse fields") {
    const AlphaSet a = build_alpha_set();
    std::mt19937_64 rng(2024);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto r = bilinear_vs_field_check(random_transverse(rng), a);
        if (r.scale > 0.0) worst = std::max(worst, r.max_relative());
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("zero field has zero residuals") {
    const AlphaSet a = build_alpha_set();
    CHECK(bilinear_vs_field_check(real_field({0, 0, 0}, {0, 0, 0}), a).max_abs() == 0.0);
}

TEST_CASE("bilinears of Hermitian matrices are real for arbitrary complex states") {
    const AlphaSet a = build_alpha_set();
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        Bispinor psi;
        for (int i = 0; i < 4; ++i) psi[i] = cplx(u(rng), u(rng));
        const double scale = psi.norm2();
        for (int mu = 0; mu <= 4; ++mu)
            CHECK(std::abs(bilinear(psi, a.by_index(mu)).imag()) <= 1e-14 * scale);
    }
}

TEST_CASE("pointwise normalization divides out sqrt(8 pi m c^2)") {
    Bispinor psi;
    psi[0] = std::sqrt(8.0 * pi);  // psi^+ psi = 8 pi m c^2 in natural units
    const Bispinor unit = normalize(psi, 1.0);
    CHECK(unit.norm2() == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS((void)normalize(Bispinor{}, 1.0), std::invalid_argument);
}

TEST_CASE("grid normalization is quadrature-exact and scale invariant") {
    FieldGrid1D grid(64, 0.1, 1.0);
    for (std::size_t i = 0; i < grid.n; ++i)
        grid.set(i, Bispinor{{cplx(0.3), cplx(0.0, -0.2), cplx(1.1), cplx(0.4, 0.9)}});
    const FieldGrid1D unit = normalize(grid);
    CHECK(total_norm(unit) == doctest::Approx(1.0).epsilon(1e-12));

    // scaling the input first must not change the result (up to rounding)
    FieldGrid1D scaled = grid;
    for (auto& c : scaled.comp)
        for (cplx& v : c) v *= 17.3;
    const FieldGrid1D unit2 = normalize(scaled);
    for (std::size_t i = 0; i < grid.n; ++i)
        for (int k = 0; k < 4; ++k)
            CHECK(std::abs(unit2.at(i)[k] - unit.at(i)[k]) < 1e-14);

    CHECK_THROWS_AS((void)normalize(FieldGrid1D(16, 0.1, 1.0)), std::invalid_argument);
}
