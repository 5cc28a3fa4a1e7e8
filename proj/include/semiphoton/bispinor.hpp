// Bispinor <-> transverse electromagnetic field correspondence and the
// bilinear covariants built on the alpha-set.
//
// The mapping for a wave along y (E_y = H_y = 0) packs the field as
//   psi = (E_z, E_x, i H_z, i H_x),
// and each bilinear psi^+ alpha_mu psi lands on a field invariant:
//   alpha4 -> E^2 - H^2,  alpha0 -> E^2 + H^2,
//   alpha_y -> 2 (E x H)_y,  alpha5 -> 2 (E . H).
#pragma once

#include "semiphoton/alpha.hpp"
#include "semiphoton/types.hpp"

namespace semiphoton {

struct Bispinor {
    std::array<cplx, 4> c{};

    cplx& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    const cplx& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    Bispinor operator+(const Bispinor& o) const;
    Bispinor operator-(const Bispinor& o) const;
    Bispinor operator*(cplx s) const;

    double norm2() const;  // psi^+ psi
    double norm() const;
    double max_abs() const;
};

inline Bispinor operator*(cplx s, const Bispinor& p) { return p * s; }

/// psi^+ phi
cplx inner(const Bispinor& a, const Bispinor& b);

/// m . psi
Bispinor apply(const Matrix4& m, const Bispinor& psi);

/// psi^+ M psi. Real whenever M is Hermitian.
cplx bilinear(const Bispinor& psi, const Matrix4& m);

struct EMFieldPoint {
    CVec3 E;
    CVec3 H;

    bool is_real(double tol = 0.0) const;
    bool is_transverse(double tol = 0.0) const;  // E_y = H_y = 0
};

/// Field -> bispinor packing. Throws std::invalid_argument when the input has
/// a y-component (non-transverse states have no bispinor image).
Bispinor to_bispinor(const EMFieldPoint& f);

/// Exact inverse of to_bispinor.
EMFieldPoint from_bispinor(const Bispinor& psi);

/// Classical invariants of a real field point. S is the Poynting vector
/// (c/4pi) E x H and g = S/c^2 the field momentum density.
struct InvariantReport {
    double I1 = 0.0;            // E^2 - H^2
    double pseudoscalar = 0.0;  // 2 (E . H)
    double U = 0.0;             // (E^2 + H^2) / 8pi
    Vec3 S;
    Vec3 g;
};

InvariantReport invariant_report(const EMFieldPoint& f, const Units& u = Units::natural());

/// Residuals of the four bilinear-vs-field identities at one real transverse
/// field point, normalized by E^2 + H^2.
struct BilinearFieldResiduals {
    double scalar = 0.0;        // |psi^+ a4 psi - (E^2 - H^2)|
    double density = 0.0;       // |psi^+ a0 psi - (E^2 + H^2)|
    double flux = 0.0;          // |psi^+ a_y psi - 2 (E x H)_y|
    double pseudoscalar = 0.0;  // |psi^+ a5 psi - 2 (E . H)|
    double scale = 0.0;         // E^2 + H^2

    double max_abs() const;
    double max_relative() const;
};

BilinearFieldResiduals bilinear_vs_field_check(const EMFieldPoint& f, const AlphaSet& a);

/// Fixed physical rescale psi -> psi / sqrt(8 pi m c^2), the scale on which
/// the field energy normalization turns into unit probability.
/// Throws std::invalid_argument on a zero spinor.
Bispinor normalize(const Bispinor& psi, double mass, const Units& u = Units::natural());

}  // namespace semiphoton
