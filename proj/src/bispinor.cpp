#include "semiphoton/bispinor.hpp"

#include <stdexcept>

namespace semiphoton {

Bispinor Bispinor::operator+(const Bispinor& o) const {
    Bispinor r;
    for (int i = 0; i < 4; ++i) r[i] = c[static_cast<std::size_t>(i)] + o[i];
    return r;
}

Bispinor Bispinor::operator-(const Bispinor& o) const {
    Bispinor r;
    for (int i = 0; i < 4; ++i) r[i] = c[static_cast<std::size_t>(i)] - o[i];
    return r;
}

Bispinor Bispinor::operator*(cplx s) const {
    Bispinor r;
    for (int i = 0; i < 4; ++i) r[i] = c[static_cast<std::size_t>(i)] * s;
    return r;
}

double Bispinor::norm2() const {
    double s = 0.0;
    for (const cplx& v : c) s += std::norm(v);
    return s;
}

double Bispinor::norm() const { return std::sqrt(norm2()); }

double Bispinor::max_abs() const {
    double m = 0.0;
    for (const cplx& v : c) m = std::max(m, std::abs(v));
    return m;
}

cplx inner(const Bispinor& a, const Bispinor& b) {
    cplx s{};
    for (int i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
    return s;
}

Bispinor apply(const Matrix4& m, const Bispinor& psi) {
    Bispinor r;
    for (int i = 0; i < 4; ++i) {
        cplx s{};
        for (int j = 0; j < 4; ++j) s += m(i, j) * psi[j];
        r[i] = s;
    }
    return r;
}

cplx bilinear(const Bispinor& psi, const Matrix4& m) { return inner(psi, apply(m, psi)); }

bool EMFieldPoint::is_real(double tol) const {
    const double im = std::max({std::abs(E.x.imag()), std::abs(E.y.imag()), std::abs(E.z.imag()),
                                std::abs(H.x.imag()), std::abs(H.y.imag()), std::abs(H.z.imag())});
    return im <= tol;
}

bool EMFieldPoint::is_transverse(double tol) const {
    return std::abs(E.y) <= tol && std::abs(H.y) <= tol;
}

Bispinor to_bispinor(const EMFieldPoint& f) {
    if (!f.is_transverse(0.0))
        throw std::invalid_argument("to_bispinor: field has a y-component (not transverse)");
    Bispinor psi;
    psi[0] = f.E.z;
    psi[1] = f.E.x;
    psi[2] = iu * f.H.z;
    psi[3] = iu * f.H.x;
    return psi;
}

EMFieldPoint from_bispinor(const Bispinor& psi) {
    EMFieldPoint f;
    f.E.z = psi[0];
    f.E.x = psi[1];
    f.H.z = -iu * psi[2];
    f.H.x = -iu * psi[3];
    return f;
}

InvariantReport invariant_report(const EMFieldPoint& f, const Units& u) {
    if (!f.is_real(1e-12 * (std::sqrt(abs2(f.E)) + std::sqrt(abs2(f.H)))))
        throw std::invalid_argument("invariant_report: field must be real-valued");
    const Vec3 E = f.E.real();
    const Vec3 H = f.H.real();
    InvariantReport r;
    r.I1 = norm2(E) - norm2(H);
    r.pseudoscalar = 2.0 * dot(E, H);
    r.U = (norm2(E) + norm2(H)) / (8.0 * pi);
    r.S = (u.c / (4.0 * pi)) * cross(E, H);
    r.g = r.S / (u.c * u.c);
    return r;
}

double BilinearFieldResiduals::max_abs() const {
    return std::max({scalar, density, flux, pseudoscalar});
}

double BilinearFieldResiduals::max_relative() const {
    return scale > 0.0 ? max_abs() / scale : max_abs();
}

BilinearFieldResiduals bilinear_vs_field_check(const EMFieldPoint& f, const AlphaSet& a) {
    const Vec3 E = f.E.real();
    const Vec3 H = f.H.real();
    const Bispinor psi = to_bispinor(f);

    BilinearFieldResiduals r;
    r.scale = norm2(E) + norm2(H);
    r.scalar = std::abs(bilinear(psi, a.alpha4) - cplx(norm2(E) - norm2(H)));
    r.density = std::abs(bilinear(psi, a.alpha0) - cplx(norm2(E) + norm2(H)));
    r.flux = std::abs(bilinear(psi, a.alpha2) - cplx(2.0 * cross(E, H).y));
    r.pseudoscalar = std::abs(bilinear(psi, a.alpha5) - cplx(2.0 * dot(E, H)));
    return r;
}

Bispinor normalize(const Bispinor& psi, double mass, const Units& u) {
    if (psi.norm2() == 0.0) throw std::invalid_argument("normalize: zero spinor");
    const double scale = std::sqrt(8.0 * pi * mass * u.c * u.c);
    return psi * cplx(1.0 / scale);
}

}  // namespace semiphoton
