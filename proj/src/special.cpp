#include "frd/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace frd::special {

namespace {

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// Lanczos coefficients, g = 7, n = 9 (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

cplx lgamma_lanczos_core(cplx z) {
    // valid for Re(z) > 0.5; caller handles reflection
    z -= 1.0;
    cplx acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + static_cast<double>(i));
    cplx t = z + kLanczosG + 0.5;
    constexpr double half_log_two_pi = 0.91893853320467274178;
    return half_log_two_pi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

} // namespace

double rgamma(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    int sign = 0;
    double lg = signed_lgamma(x, sign);
    if (lg > 700.0) return 0.0; // Gamma overflows, reciprocal underflows
    return sign * std::exp(-lg);
}

double signed_lgamma(double x, int& sign) {
    if (is_nonpositive_integer(x)) {
        sign = 0;
        return std::numeric_limits<double>::infinity();
    }
    double r = ::lgamma_r(x, &sign);
    return r;
}

cplx lgamma(cplx z) {
    if (z.real() < 0.5) {
        // reflection: log Gamma(z) = log(pi/sin(pi z)) - log Gamma(1 - z)
        const double pi = std::numbers::pi;
        // log sin(pi z) computed overflow-safely for large |Im z|
        cplx pz = pi * z;
        cplx logsin;
        double aim = std::abs(pz.imag());
        if (aim > 20.0) {
            // sin(w) ~ -(i/2) e^{i w sgn(Im w)} ... use log form directly
            cplx iw = cplx(0.0, 1.0) * pz;
            if (pz.imag() > 0)
                logsin = -iw + std::log(cplx(0.0, 0.5)) + std::log(1.0 - std::exp(2.0 * iw));
            else
                logsin = iw + std::log(cplx(0.0, -0.5)) + std::log(1.0 - std::exp(-2.0 * iw));
        } else {
            logsin = std::log(std::sin(pz));
        }
        return std::log(cplx(pi)) - logsin - lgamma(1.0 - z);
    }
    return lgamma_lanczos_core(z);
}

double log_pochhammer(double a, double s, int& sign) {
    int s1 = 0, s2 = 0;
    double num = signed_lgamma(a + s, s1);
    double den = signed_lgamma(a, s2);
    if (s1 == 0 || s2 == 0) {
        sign = 0;
        return -std::numeric_limits<double>::infinity();
    }
    sign = s1 * s2;
    return num - den;
}

} // namespace frd::special
