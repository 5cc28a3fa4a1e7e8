// Scalar reference kernels. These define the semantics (and the operation
// tree) that the SIMD variants must reproduce.
#include "semiphoton/kernels.hpp"

namespace semiphoton::kernels {

namespace {

void cdiff4_scalar(const cplx* f, cplx* out, std::size_t n, double inv12h) {
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t im2 = (i + n - 2) % n;
        const std::size_t im1 = (i + n - 1) % n;
        const std::size_t ip1 = (i + 1) % n;
        const std::size_t ip2 = (i + 2) % n;
        out[i] = ((f[im2] - f[ip2]) + 8.0 * (f[ip1] - f[im1])) * inv12h;
    }
}

void iaxpby_scalar(cplx* out, const cplx* x, const cplx* y, double a, double b, double sign,
                   std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double re = a * x[i].real() + b * y[i].real();
        const double im = a * x[i].imag() + b * y[i].imag();
        out[i] = cplx(-sign * im, sign * re);  // sign * i * (re + i im)
    }
}

void axpy_scalar(cplx* y, const cplx* x, double a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void xpay_scalar(cplx* out, const cplx* x, const cplx* y, double a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + a * y[i];
}

double sum_abs2_scalar(const cplx* x, std::size_t n) {
    // Four partial sums over the double lanes, matching the SIMD accumulator
    // layout so the reduction order is identical across backends.
    const double* d = reinterpret_cast<const double*>(x);
    const std::size_t m = 2 * n;
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    std::size_t j = 0;
    for (; j + 4 <= m; j += 4) {
        acc[0] += d[j] * d[j];
        acc[1] += d[j + 1] * d[j + 1];
        acc[2] += d[j + 2] * d[j + 2];
        acc[3] += d[j + 3] * d[j + 3];
    }
    for (; j < m; ++j) acc[j % 4] += d[j] * d[j];
    return (acc[0] + acc[2]) + (acc[1] + acc[3]);
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar", cdiff4_scalar, iaxpby_scalar, axpy_scalar, xpay_scalar,
                         sum_abs2_scalar};
    return ops;
}

}  // namespace semiphoton::kernels
