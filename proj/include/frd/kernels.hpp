#pragma once

#include <cstddef>

namespace frd::kernels {

// Data-parallel inner loops behind the transform and finite-difference
// solvers.  Scalar versions are the reference; the AVX2 variants are
// selected once per process at startup.  axpy and stencil_apply are
// bit-identical between implementations (same per-element operation order,
// no FMA contraction); osc_sum differs only in the sin/cos evaluation and
// is equivalence-tested to a few ULP per term.

struct Dispatch {
    const char* name;

    // y[i] += a * x[i]
    void (*axpy)(double a, const double* x, double* y, std::size_t n);

    // out[i] = sum_{j=-hw..hw} w[|j|] * u[i+j], zero outside [0, n)
    void (*stencil_apply)(const double* u, std::size_t n,
                          const double* w, std::size_t hw, double* out);

    // (re, im) = sum_i (cre[i] + i*cim[i]) * exp(-i * k[i] * x)
    void (*osc_sum)(const double* k, const double* cre, const double* cim,
                    std::size_t n, double x, double* re, double* im);
};

const Dispatch& scalar();

/// AVX2 implementation, or nullptr when the CPU lacks support.
const Dispatch* avx2();

/// Active implementation: AVX2 when available, scalar otherwise.
/// Overridable with FRD_KERNEL=scalar|avx2 (evaluated once).
const Dispatch& active();

} // namespace frd::kernels
