#include "frd/kernels.hpp"

#include <cmath>

namespace frd::kernels {

namespace {

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + a * x[i];
}

void stencil_scalar(const double* u, std::size_t n,
                    const double* w, std::size_t hw, double* out) {
    // j loop outer so the accumulation order matches the SIMD variant
    for (std::size_t i = 0; i < n; ++i) out[i] = w[0] * u[i];
    for (std::size_t j = 1; j <= hw; ++j) {
        double wj = w[j];
        for (std::size_t i = j; i < n; ++i) out[i] = out[i] + wj * u[i - j];
        for (std::size_t i = 0; i + j < n; ++i) out[i] = out[i] + wj * u[i + j];
    }
}

void osc_sum_scalar(const double* k, const double* cre, const double* cim,
                    std::size_t n, double x, double* re, double* im) {
    double sr = 0.0, si = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double ph = k[i] * x;
        double c = std::cos(ph), s = std::sin(ph);
        // (cre + i cim) * (c - i s)
        sr += cre[i] * c + cim[i] * s;
        si += cim[i] * c - cre[i] * s;
    }
    *re = sr;
    *im = si;
}

} // namespace

const Dispatch& scalar() {
    static const Dispatch d{"scalar", axpy_scalar, stencil_scalar, osc_sum_scalar};
    return d;
}

} // namespace frd::kernels
