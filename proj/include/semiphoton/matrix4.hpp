// Dense 4x4 complex matrix, the working size of the whole spinor algebra.
#pragma once

#include <algorithm>
#include <array>

#include "semiphoton/types.hpp"

namespace semiphoton {

class Matrix4 {
  public:
    Matrix4() = default;

    static Matrix4 identity() {
        Matrix4 m;
        for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }

    cplx& operator()(int r, int c) { return e_[static_cast<std::size_t>(4 * r + c)]; }
    const cplx& operator()(int r, int c) const { return e_[static_cast<std::size_t>(4 * r + c)]; }

    Matrix4 operator+(const Matrix4& o) const {
        Matrix4 r;
        for (std::size_t i = 0; i < 16; ++i) r.e_[i] = e_[i] + o.e_[i];
        return r;
    }

    Matrix4 operator-(const Matrix4& o) const {
        Matrix4 r;
        for (std::size_t i = 0; i < 16; ++i) r.e_[i] = e_[i] - o.e_[i];
        return r;
    }

    Matrix4 operator*(const Matrix4& o) const {
        Matrix4 r;
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) {
                const cplx a = (*this)(i, k);
                if (a == cplx{}) continue;
                for (int j = 0; j < 4; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    Matrix4 operator*(cplx s) const {
        Matrix4 r;
        for (std::size_t i = 0; i < 16; ++i) r.e_[i] = e_[i] * s;
        return r;
    }

    Matrix4 adjoint() const {
        Matrix4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
        return r;
    }

    /// Largest entry magnitude; the max-norm used by the exact algebra checks.
    double max_abs() const {
        double m = 0.0;
        for (const cplx& v : e_) m = std::max(m, std::abs(v));
        return m;
    }

    double hermiticity_defect() const { return (*this - adjoint()).max_abs(); }

  private:
    std::array<cplx, 16> e_{};
};

inline Matrix4 operator*(cplx s, const Matrix4& m) { return m * s; }

inline double max_abs_diff(const Matrix4& a, const Matrix4& b) { return (a - b).max_abs(); }

}  // namespace semiphoton
