// NEON kernel variants (aarch64). Two-lane double vectors, same operation
// tree as the scalar reference.
#include "semiphoton/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace semiphoton::kernels {

namespace {

void cdiff4_neon(const cplx* f, cplx* out, std::size_t n, double inv12h) {
    if (n < 8) {
        scalar_ops().cdiff4(f, out, n, inv12h);
        return;
    }
    const double* d = reinterpret_cast<const double*>(f);
    double* o = reinterpret_cast<double*>(out);
    const std::size_t m = 2 * n;

    for (std::size_t i : {std::size_t{0}, std::size_t{1}, n - 2, n - 1}) {
        const std::size_t im2 = (i + n - 2) % n;
        const std::size_t im1 = (i + n - 1) % n;
        const std::size_t ip1 = (i + 1) % n;
        const std::size_t ip2 = (i + 2) % n;
        out[i] = ((f[im2] - f[ip2]) + 8.0 * (f[ip1] - f[im1])) * inv12h;
    }

    const float64x2_t eight = vdupq_n_f64(8.0);
    const float64x2_t scale = vdupq_n_f64(inv12h);
    std::size_t j = 4;
    for (; j + 2 <= m - 4; j += 2) {
        const float64x2_t fm2 = vld1q_f64(d + j - 4);
        const float64x2_t fm1 = vld1q_f64(d + j - 2);
        const float64x2_t fp1 = vld1q_f64(d + j + 2);
        const float64x2_t fp2 = vld1q_f64(d + j + 4);
        const float64x2_t t =
            vaddq_f64(vsubq_f64(fm2, fp2), vmulq_f64(eight, vsubq_f64(fp1, fm1)));
        vst1q_f64(o + j, vmulq_f64(t, scale));
    }
    for (; j < m - 4; ++j)
        o[j] = ((d[j - 4] - d[j + 4]) + 8.0 * (d[j + 2] - d[j - 2])) * inv12h;
}

void iaxpby_neon(cplx* out, const cplx* x, const cplx* y, double a, double b, double sign,
                 std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    const double* yd = reinterpret_cast<const double*>(y);
    double* od = reinterpret_cast<double*>(out);
    const float64x2_t va = vdupq_n_f64(a);
    const float64x2_t vb = vdupq_n_f64(b);
    // +i: (re, im) -> (-im, re); -i: (im, -re)
    const float64x2_t flip = sign > 0.0 ? float64x2_t{-1.0, 1.0} : float64x2_t{1.0, -1.0};
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t t = vaddq_f64(vmulq_f64(va, vld1q_f64(xd + 2 * i)),
                                        vmulq_f64(vb, vld1q_f64(yd + 2 * i)));
        vst1q_f64(od + 2 * i, vmulq_f64(vextq_f64(t, t, 1), flip));
    }
}

void axpy_neon(cplx* y, const cplx* x, double a, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const std::size_t m = 2 * n;
    const float64x2_t va = vdupq_n_f64(a);
    for (std::size_t j = 0; j + 2 <= m; j += 2) {
        const float64x2_t t =
            vaddq_f64(vld1q_f64(yd + j), vmulq_f64(va, vld1q_f64(xd + j)));
        vst1q_f64(yd + j, t);
    }
}

void xpay_neon(cplx* out, const cplx* x, const cplx* y, double a, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    const double* yd = reinterpret_cast<const double*>(y);
    double* od = reinterpret_cast<double*>(out);
    const std::size_t m = 2 * n;
    const float64x2_t va = vdupq_n_f64(a);
    for (std::size_t j = 0; j + 2 <= m; j += 2) {
        const float64x2_t t =
            vaddq_f64(vld1q_f64(xd + j), vmulq_f64(va, vld1q_f64(yd + j)));
        vst1q_f64(od + j, t);
    }
}

double sum_abs2_neon(const cplx* x, std::size_t n) {
    const double* d = reinterpret_cast<const double*>(x);
    const std::size_t m = 2 * n;
    float64x2_t acc02 = vdupq_n_f64(0.0);
    float64x2_t acc13 = vdupq_n_f64(0.0);
    std::size_t j = 0;
    for (; j + 4 <= m; j += 4) {
        const float64x2_t v0 = vld1q_f64(d + j);
        const float64x2_t v1 = vld1q_f64(d + j + 2);
        acc02 = vaddq_f64(acc02, vmulq_f64(v0, v0));
        acc13 = vaddq_f64(acc13, vmulq_f64(v1, v1));
    }
    double lanes[4] = {vgetq_lane_f64(acc02, 0), vgetq_lane_f64(acc02, 1),
                       vgetq_lane_f64(acc13, 0), vgetq_lane_f64(acc13, 1)};
    for (; j < m; ++j) lanes[j % 4] += d[j] * d[j];
    return (lanes[0] + lanes[2]) + (lanes[1] + lanes[3]);
}

}  // namespace

const Ops& neon_ops() {
    static const Ops ops{"neon", cdiff4_neon, iaxpby_neon, axpy_neon, xpay_neon, sum_abs2_neon};
    return ops;
}

}  // namespace semiphoton::kernels

#endif  // aarch64
