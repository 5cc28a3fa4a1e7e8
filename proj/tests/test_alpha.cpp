#include <doctest.h>

#include "semiphoton/alpha.hpp"

using namespace semiphoton;

namespace {

// Brute-force 4x4 product, kept independent of Matrix4::operator*.
Matrix4 slow_product(const Matrix4& a, const Matrix4& b) {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s{};
            for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

}  // namespace

TEST_CASE("alpha0 is the identity") {
    const AlphaSet a = build_alpha_set();
    CHECK(max_abs_diff(a.alpha0, Matrix4::identity()) == 0.0);
}

TEST_CASE("alpha matrices square to the identity") {
    const AlphaSet a = build_alpha_set();
    for (int mu = 1; mu <= 4; ++mu) {
        const Matrix4& m = a.by_index(mu);
        CHECK(max_abs_diff(slow_product(m, m), Matrix4::identity()) == 0.0);
    }
}

TEST_CASE("distinct alpha matrices anticommute exactly") {
    const AlphaSet a = build_alpha_set();
    // one hand-picked pair ...
    const Matrix4 zero = a.alpha1 * a.alpha2 + a.alpha2 * a.alpha1;
    CHECK(zero.max_abs() == 0.0);
    // ... and the whole set
    CHECK(anticommutation_defect(a) == 0.0);
}

TEST_CASE("alpha5 equals the direct product alpha1 alpha2 alpha3 alpha4") {
    const AlphaSet a = build_alpha_set();
    const Matrix4 product =
        slow_product(slow_product(slow_product(a.alpha1, a.alpha2), a.alpha3), a.alpha4);
    CHECK(max_abs_diff(a.alpha5, product) == 0.0);
    CHECK(alpha5_product_defect(a) == 0.0);

    // closed form: offdiag(-i, +i) blocks
    Matrix4 expected;
    expected(0, 2) = -iu;
    expected(1, 3) = -iu;
    expected(2, 0) = iu;
    expected(3, 1) = iu;
    CHECK(max_abs_diff(a.alpha5, expected) == 0.0);
}

TEST_CASE("every alpha matrix is Hermitian") {
    const AlphaSet a = build_alpha_set();
    CHECK(hermiticity_defect(a) == 0.0);
}

TEST_CASE("alpha5 squares to the identity and anticommutes with the vector set") {
    const AlphaSet a = build_alpha_set();
    CHECK(max_abs_diff(a.alpha5 * a.alpha5, Matrix4::identity()) == 0.0);
    for (int k = 1; k <= 3; ++k) {
        const Matrix4& m = a.vector_component(k);
        CHECK((m * a.alpha5 + a.alpha5 * m).max_abs() == 0.0);
    }
}
