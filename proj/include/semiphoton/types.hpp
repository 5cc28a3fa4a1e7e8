// Small value types shared across the library: complex scalars, real and
// complex 3-vectors, and the unit system carried through the wave modules.
#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace semiphoton {

using cplx = std::complex<double>;

inline constexpr cplx iu{0.0, 1.0};

inline constexpr double pi = 3.14159265358979323846;

/// Unit system for the wave-mechanics modules. The library works in natural
/// units (hbar = c = 1) by default; CGS values are injected at the boundary.
struct Units {
    double hbar = 1.0;
    double c = 1.0;

    static constexpr Units natural() { return {1.0, 1.0}; }
};

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }

struct CVec3 {
    cplx x{}, y{}, z{};

    cplx& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    const cplx& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    CVec3 operator+(const CVec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    CVec3 operator-(const CVec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    CVec3 operator*(cplx s) const { return {x * s, y * s, z * s}; }

    Vec3 real() const { return {x.real(), y.real(), z.real()}; }
    Vec3 imag() const { return {x.imag(), y.imag(), z.imag()}; }

    static CVec3 from_real(const Vec3& v) { return {cplx(v.x), cplx(v.y), cplx(v.z)}; }
};

inline CVec3 cross(const CVec3& a, const CVec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Sesquilinear dot a*.b, the pairing used for complex field invariants.
inline cplx herm_dot(const CVec3& a, const CVec3& b) {
    return std::conj(a.x) * b.x + std::conj(a.y) * b.y + std::conj(a.z) * b.z;
}

inline double abs2(const CVec3& v) { return std::norm(v.x) + std::norm(v.y) + std::norm(v.z); }

}  // namespace semiphoton
