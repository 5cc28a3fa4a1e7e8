// The alpha-set of Dirac matrices in the Dirac–Pauli representation:
// alpha0 = 1, alpha_k = offdiag(sigma_k, sigma_k), alpha4 = beta = diag(1,1,-1,-1),
// alpha5 = alpha1 alpha2 alpha3 alpha4.
#pragma once

#include "semiphoton/matrix4.hpp"

namespace semiphoton {

struct AlphaSet {
    Matrix4 alpha0;  // unit matrix
    Matrix4 alpha1;
    Matrix4 alpha2;
    Matrix4 alpha3;
    Matrix4 alpha4;  // beta
    Matrix4 alpha5;  // pseudoscalar, alpha1*alpha2*alpha3*alpha4

    /// Spatial component by axis index k = 1..3 (x, y, z).
    const Matrix4& vector_component(int k) const;

    /// Full set by label mu = 0..5.
    const Matrix4& by_index(int mu) const;
};

AlphaSet build_alpha_set();

/// max over i,j in {1..4} of || a_i a_j + a_j a_i - 2 delta_ij ||_max.
/// Exactly zero for a valid set (integer/imaginary-unit entries).
double anticommutation_defect(const AlphaSet& a);

/// || alpha5 - alpha1 alpha2 alpha3 alpha4 ||_max recomputed by direct product.
double alpha5_product_defect(const AlphaSet& a);

/// max over mu = 0..5 of the Hermiticity defect.
double hermiticity_defect(const AlphaSet& a);

}  // namespace semiphoton
