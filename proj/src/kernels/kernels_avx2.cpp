// AVX2 kernel variants. This translation unit is compiled with -mavx2; it is
// only reached through the runtime dispatch after a cpuid check.
#include "semiphoton/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstdint>

namespace semiphoton::kernels {

namespace {

// Interleaved complex<double> buffers are plain double arrays of length 2n;
// the stencil and axpy-style kernels act lane-wise on those doubles.

void cdiff4_avx2(const cplx* f, cplx* out, std::size_t n, double inv12h) {
    if (n < 8) {
        scalar_ops().cdiff4(f, out, n, inv12h);
        return;
    }
    const double* d = reinterpret_cast<const double*>(f);
    double* o = reinterpret_cast<double*>(out);
    const std::size_t m = 2 * n;

    // wrapped boundary points (complex indices 0, 1, n-2, n-1)
    for (std::size_t i : {std::size_t{0}, std::size_t{1}, n - 2, n - 1}) {
        const std::size_t im2 = (i + n - 2) % n;
        const std::size_t im1 = (i + n - 1) % n;
        const std::size_t ip1 = (i + 1) % n;
        const std::size_t ip2 = (i + 2) % n;
        out[i] = ((f[im2] - f[ip2]) + 8.0 * (f[ip1] - f[im1])) * inv12h;
    }

    const __m256d eight = _mm256_set1_pd(8.0);
    const __m256d scale = _mm256_set1_pd(inv12h);
    std::size_t j = 4;
    for (; j + 8 <= m - 4; j += 4) {
        const __m256d fm2 = _mm256_loadu_pd(d + j - 4);
        const __m256d fm1 = _mm256_loadu_pd(d + j - 2);
        const __m256d fp1 = _mm256_loadu_pd(d + j + 2);
        const __m256d fp2 = _mm256_loadu_pd(d + j + 4);
        const __m256d t = _mm256_add_pd(_mm256_sub_pd(fm2, fp2),
                                        _mm256_mul_pd(eight, _mm256_sub_pd(fp1, fm1)));
        _mm256_storeu_pd(o + j, _mm256_mul_pd(t, scale));
    }
    for (; j < m - 4; ++j)
        o[j] = ((d[j - 4] - d[j + 4]) + 8.0 * (d[j + 2] - d[j - 2])) * inv12h;
}

void iaxpby_avx2(cplx* out, const cplx* x, const cplx* y, double a, double b, double sign,
                 std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    const double* yd = reinterpret_cast<const double*>(y);
    double* od = reinterpret_cast<double*>(out);
    const std::size_t m = 2 * n;

    const __m256d va = _mm256_set1_pd(a);
    const __m256d vb = _mm256_set1_pd(b);
    // multiply by +i: (re, im) -> (-im, re); by -i: (im, -re)
    const __m256d neg_even = _mm256_castsi256_pd(
        _mm256_set_epi64x(0, INT64_MIN, 0, INT64_MIN));  // flips lanes 0, 2
    const __m256d neg_odd = _mm256_castsi256_pd(
        _mm256_set_epi64x(INT64_MIN, 0, INT64_MIN, 0));  // flips lanes 1, 3
    const __m256d flip = sign > 0.0 ? neg_even : neg_odd;

    std::size_t j = 0;
    for (; j + 4 <= m; j += 4) {
        const __m256d t = _mm256_add_pd(_mm256_mul_pd(va, _mm256_loadu_pd(xd + j)),
                                        _mm256_mul_pd(vb, _mm256_loadu_pd(yd + j)));
        const __m256d swapped = _mm256_permute_pd(t, 0x5);  // (im, re) pairs
        _mm256_storeu_pd(od + j, _mm256_xor_pd(swapped, flip));
    }
    for (std::size_t i = j / 2; i < n; ++i) {
        const double re = a * x[i].real() + b * y[i].real();
        const double im = a * x[i].imag() + b * y[i].imag();
        out[i] = cplx(-sign * im, sign * re);
    }
}

void axpy_avx2(cplx* y, const cplx* x, double a, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const std::size_t m = 2 * n;
    const __m256d va = _mm256_set1_pd(a);
    std::size_t j = 0;
    for (; j + 4 <= m; j += 4) {
        const __m256d t = _mm256_add_pd(_mm256_loadu_pd(yd + j),
                                        _mm256_mul_pd(va, _mm256_loadu_pd(xd + j)));
        _mm256_storeu_pd(yd + j, t);
    }
    for (; j < m; ++j) yd[j] += a * xd[j];
}

void xpay_avx2(cplx* out, const cplx* x, const cplx* y, double a, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    const double* yd = reinterpret_cast<const double*>(y);
    double* od = reinterpret_cast<double*>(out);
    const std::size_t m = 2 * n;
    const __m256d va = _mm256_set1_pd(a);
    std::size_t j = 0;
    for (; j + 4 <= m; j += 4) {
        const __m256d t = _mm256_add_pd(_mm256_loadu_pd(xd + j),
                                        _mm256_mul_pd(va, _mm256_loadu_pd(yd + j)));
        _mm256_storeu_pd(od + j, t);
    }
    for (; j < m; ++j) od[j] = xd[j] + a * yd[j];
}

double sum_abs2_avx2(const cplx* x, std::size_t n) {
    const double* d = reinterpret_cast<const double*>(x);
    const std::size_t m = 2 * n;
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= m; j += 4) {
        const __m256d v = _mm256_loadu_pd(d + j);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    for (; j < m; ++j) lanes[j % 4] += d[j] * d[j];
    return (lanes[0] + lanes[2]) + (lanes[1] + lanes[3]);
}

}  // namespace

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

const Ops& avx2_ops() {
    static const Ops ops{"avx2", cdiff4_avx2, iaxpby_avx2, axpy_avx2, xpay_avx2, sum_abs2_avx2};
    return ops;
}

}  // namespace semiphoton::kernels

#endif  // x86-64
