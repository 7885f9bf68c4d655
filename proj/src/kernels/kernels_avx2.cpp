#if defined(__x86_64__) || defined(_M_X64)

#include "frd/kernels.hpp"

#include <cmath>
#include <immintrin.h>

namespace frd::kernels {

namespace {

// ---- 4-lane sin/cos ------------------------------------------------------
// Cody-Waite pi/2 reduction (three-part, good to |x| ~ 1e8 at full double
// precision) followed by the fdlibm minimax polynomials on [-pi/4, pi/4].

const __m256d kTwoOverPi = _mm256_set1_pd(6.36619772367581343076e-01);
const __m256d kMagic = _mm256_set1_pd(6755399441055744.0); // 1.5 * 2^52
const __m256d kPio2_1 = _mm256_set1_pd(1.57079632673412561417e+00);
const __m256d kPio2_2 = _mm256_set1_pd(6.07710050630396597660e-11);
const __m256d kPio2_3 = _mm256_set1_pd(2.02226624871116645580e-21);

const __m256d kS1 = _mm256_set1_pd(-1.66666666666666324348e-01);
const __m256d kS2 = _mm256_set1_pd(8.33333333332248946124e-03);
const __m256d kS3 = _mm256_set1_pd(-1.98412698298579493134e-04);
const __m256d kS4 = _mm256_set1_pd(2.75573137070700676789e-06);
const __m256d kS5 = _mm256_set1_pd(-2.50507602534068634195e-08);
const __m256d kS6 = _mm256_set1_pd(1.58969099521155010221e-10);

const __m256d kC1 = _mm256_set1_pd(4.16666666666666019037e-02);
const __m256d kC2 = _mm256_set1_pd(-1.38888888888741095749e-03);
const __m256d kC3 = _mm256_set1_pd(2.48015872894767294178e-05);
const __m256d kC4 = _mm256_set1_pd(-2.75573143513906633035e-07);
const __m256d kC5 = _mm256_set1_pd(2.08757232129817482790e-09);
const __m256d kC6 = _mm256_set1_pd(-1.13596475577881948265e-11);

inline void sincos4(__m256d x, __m256d& s_out, __m256d& c_out) {
    __m256d t = _mm256_mul_pd(x, kTwoOverPi);
    __m256d dj = _mm256_add_pd(t, kMagic);
    __m256i q = _mm256_castpd_si256(dj);
    __m256d j = _mm256_sub_pd(dj, kMagic);

    __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(j, kPio2_1));
    r = _mm256_sub_pd(r, _mm256_mul_pd(j, kPio2_2));
    r = _mm256_sub_pd(r, _mm256_mul_pd(j, kPio2_3));

    __m256d z = _mm256_mul_pd(r, r);

    __m256d ps = kS6;
    ps = _mm256_add_pd(_mm256_mul_pd(ps, z), kS5);
    ps = _mm256_add_pd(_mm256_mul_pd(ps, z), kS4);
    ps = _mm256_add_pd(_mm256_mul_pd(ps, z), kS3);
    ps = _mm256_add_pd(_mm256_mul_pd(ps, z), kS2);
    ps = _mm256_add_pd(_mm256_mul_pd(ps, z), kS1);
    __m256d poly_sin = _mm256_add_pd(r, _mm256_mul_pd(_mm256_mul_pd(r, z), ps));

    __m256d pc = kC6;
    pc = _mm256_add_pd(_mm256_mul_pd(pc, z), kC5);
    pc = _mm256_add_pd(_mm256_mul_pd(pc, z), kC4);
    pc = _mm256_add_pd(_mm256_mul_pd(pc, z), kC3);
    pc = _mm256_add_pd(_mm256_mul_pd(pc, z), kC2);
    pc = _mm256_add_pd(_mm256_mul_pd(pc, z), kC1);
    __m256d half = _mm256_set1_pd(0.5);
    __m256d one = _mm256_set1_pd(1.0);
    __m256d poly_cos = _mm256_sub_pd(one, _mm256_mul_pd(half, z));
    poly_cos = _mm256_add_pd(poly_cos, _mm256_mul_pd(_mm256_mul_pd(z, z), pc));

    __m256i one_i = _mm256_set1_epi64x(1);
    __m256i two_i = _mm256_set1_epi64x(2);
    __m256d swap = _mm256_castsi256_pd(
        _mm256_cmpeq_epi64(_mm256_and_si256(q, one_i), one_i));

    __m256d s = _mm256_blendv_pd(poly_sin, poly_cos, swap);
    __m256d c = _mm256_blendv_pd(poly_cos, poly_sin, swap);

    __m256i sign_s = _mm256_slli_epi64(_mm256_and_si256(q, two_i), 62);
    __m256i sign_c = _mm256_slli_epi64(
        _mm256_and_si256(_mm256_add_epi64(q, one_i), two_i), 62);

    s_out = _mm256_xor_pd(s, _mm256_castsi256_pd(sign_s));
    c_out = _mm256_xor_pd(c, _mm256_castsi256_pd(sign_c));
}

// ---- kernels --------------------------------------------------------------

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        __m256d vx = _mm256_loadu_pd(x + i);
        vy = _mm256_add_pd(vy, _mm256_mul_pd(va, vx));
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

void stencil_avx2(const double* u, std::size_t n,
                  const double* w, std::size_t hw, double* out) {
    __m256d w0 = _mm256_set1_pd(w[0]);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_mul_pd(w0, _mm256_loadu_pd(u + i)));
    for (; i < n; ++i) out[i] = w[0] * u[i];

    for (std::size_t j = 1; j <= hw; ++j) {
        double wj = w[j];
        __m256d vw = _mm256_set1_pd(wj);
        std::size_t k = j;
        for (; k + 4 <= n; k += 4) {
            __m256d vo = _mm256_loadu_pd(out + k);
            vo = _mm256_add_pd(vo, _mm256_mul_pd(vw, _mm256_loadu_pd(u + k - j)));
            _mm256_storeu_pd(out + k, vo);
        }
        for (; k < n; ++k) out[k] = out[k] + wj * u[k - j];
        k = 0;
        for (; k + 4 + j <= n; k += 4) {
            __m256d vo = _mm256_loadu_pd(out + k);
            vo = _mm256_add_pd(vo, _mm256_mul_pd(vw, _mm256_loadu_pd(u + k + j)));
            _mm256_storeu_pd(out + k, vo);
        }
        for (; k + j < n; ++k) out[k] = out[k] + wj * u[k + j];
    }
}

void osc_sum_avx2(const double* k, const double* cre, const double* cim,
                  std::size_t n, double x, double* re, double* im) {
    __m256d vx = _mm256_set1_pd(x);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d ph = _mm256_mul_pd(_mm256_loadu_pd(k + i), vx);
        __m256d s, c;
        sincos4(ph, s, c);
        __m256d vr = _mm256_loadu_pd(cre + i);
        __m256d vi = _mm256_loadu_pd(cim + i);
        acc_re = _mm256_add_pd(acc_re,
                 _mm256_add_pd(_mm256_mul_pd(vr, c), _mm256_mul_pd(vi, s)));
        acc_im = _mm256_add_pd(acc_im,
                 _mm256_sub_pd(_mm256_mul_pd(vi, c), _mm256_mul_pd(vr, s)));
    }
    alignas(32) double buf_re[4], buf_im[4];
    _mm256_store_pd(buf_re, acc_re);
    _mm256_store_pd(buf_im, acc_im);
    double sr = (buf_re[0] + buf_re[1]) + (buf_re[2] + buf_re[3]);
    double si = (buf_im[0] + buf_im[1]) + (buf_im[2] + buf_im[3]);
    for (; i < n; ++i) {
        double ph = k[i] * x;
        double c = std::cos(ph), s = std::sin(ph);
        sr += cre[i] * c + cim[i] * s;
        si += cim[i] * c - cre[i] * s;
    }
    *re = sr;
    *im = si;
}

} // namespace

const Dispatch* avx2() {
    if (!__builtin_cpu_supports("avx2")) return nullptr;
    static const Dispatch d{"avx2", axpy_avx2, stencil_avx2, osc_sum_avx2};
    return &d;
}

} // namespace frd::kernels

#else

#include "frd/kernels.hpp"

namespace frd::kernels {
const Dispatch* avx2() { return nullptr; }
} // namespace frd::kernels

#endif
