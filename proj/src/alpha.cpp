#include "semiphoton/alpha.hpp"

#include <stdexcept>

namespace semiphoton {

namespace {

// Pauli blocks placed into the off-diagonal 2x2 corners: m = [[0, s], [s, 0]].
Matrix4 block_offdiag(const std::array<cplx, 4>& sigma) {
    Matrix4 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            m(i, 2 + j) = sigma[static_cast<std::size_t>(2 * i + j)];
            m(2 + i, j) = sigma[static_cast<std::size_t>(2 * i + j)];
        }
    return m;
}

}  // namespace

AlphaSet build_alpha_set() {
    AlphaSet a;
    a.alpha0 = Matrix4::identity();
    a.alpha1 = block_offdiag({cplx(0), cplx(1), cplx(1), cplx(0)});
    a.alpha2 = block_offdiag({cplx(0), -iu, iu, cplx(0)});
    a.alpha3 = block_offdiag({cplx(1), cplx(0), cplx(0), cplx(-1)});
    a.alpha4 = Matrix4::identity();
    a.alpha4(2, 2) = -1.0;
    a.alpha4(3, 3) = -1.0;
    a.alpha5 = a.alpha1 * a.alpha2 * a.alpha3 * a.alpha4;
    return a;
}

const Matrix4& AlphaSet::vector_component(int k) const {
    switch (k) {
        case 1: return alpha1;
        case 2: return alpha2;
        case 3: return alpha3;
        default: throw std::out_of_range("vector_component index must be 1..3");
    }
}

const Matrix4& AlphaSet::by_index(int mu) const {
    switch (mu) {
        case 0: return alpha0;
        case 1: return alpha1;
        case 2: return alpha2;
        case 3: return alpha3;
        case 4: return alpha4;
        case 5: return alpha5;
        default: throw std::out_of_range("alpha index must be 0..5");
    }
}

double anticommutation_defect(const AlphaSet& a) {
    double worst = 0.0;
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            const Matrix4& ai = a.by_index(i);
            const Matrix4& aj = a.by_index(j);
            Matrix4 anti = ai * aj + aj * ai;
            if (i == j) anti = anti - 2.0 * Matrix4::identity();
            worst = std::max(worst, anti.max_abs());
        }
    return worst;
}

double alpha5_product_defect(const AlphaSet& a) {
    return max_abs_diff(a.alpha5, a.alpha1 * a.alpha2 * a.alpha3 * a.alpha4);
}

double hermiticity_defect(const AlphaSet& a) {
    double worst = 0.0;
    for (int mu = 0; mu <= 5; ++mu) worst = std::max(worst, a.by_index(mu).hermiticity_defect());
    return worst;
}

}  // namespace semiphoton
