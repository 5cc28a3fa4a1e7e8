// Inner-loop kernels for the 1-D lattice integrator: a scalar reference
// implementation plus SIMD variants (AVX2 on x86-64, NEON on aarch64)
// selected at runtime. All variants share one operation tree per kernel so
// the backends agree to rounding level; equivalence is tested.
//
// Arrays are std::complex<double> buffers (interleaved re/im). Every kernel
// treats the complex stride explicitly, so SIMD variants work on the raw
// double lanes.
#pragma once

#include <cstddef>

#include "semiphoton/types.hpp"

namespace semiphoton::kernels {

struct Ops {
    const char* name;

    // 4th-order central difference, periodic:
    //   out[i] = ((f[i-2] - f[i+2]) + 8 (f[i+1] - f[i-1])) * inv12h
    void (*cdiff4)(const cplx* f, cplx* out, std::size_t n, double inv12h);

    // out[i] = sign * i * (a x[i] + b y[i]),  sign = +1 or -1
    void (*iaxpby)(cplx* out, const cplx* x, const cplx* y, double a, double b, double sign,
                   std::size_t n);

    // y[i] += a x[i]
    void (*axpy)(cplx* y, const cplx* x, double a, std::size_t n);

    // out[i] = x[i] + a y[i]
    void (*xpay)(cplx* out, const cplx* x, const cplx* y, double a, std::size_t n);

    // sum_i |x[i]|^2, accumulated in four round-robin partial sums
    double (*sum_abs2)(const cplx* x, std::size_t n);
};

const Ops& scalar_ops();

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_supported();
const Ops& avx2_ops();
#endif
#if defined(__aarch64__)
const Ops& neon_ops();
#endif

/// Runtime-selected backend. Picks the widest supported ISA; the environment
/// variable SEMIPHOTON_KERNEL (scalar|avx2|neon|auto) overrides.
const Ops& active_ops();

/// Force a backend by name ("scalar", "avx2", "neon", "auto"); throws
/// std::invalid_argument for unknown or unsupported names. Used by the
/// equivalence tests.
void force_backend(const char* name);

}  // namespace semiphoton::kernels
