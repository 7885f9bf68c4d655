#pragma once

#include <complex>

namespace frd::special {

using cplx = std::complex<double>;

/// 1/Gamma(x) with the convention 1/Gamma(0) = 1/Gamma(-1) = ... = 0 exactly.
double rgamma(double x);

/// log|Gamma(x)| together with the sign of Gamma(x); sign = 0 at poles.
double signed_lgamma(double x, int& sign);

/// Principal-branch log Gamma for complex argument (Lanczos, ~1e-13 relative).
cplx lgamma(cplx z);

/// log of the generalized Pochhammer (a)_s = Gamma(a+s)/Gamma(a) with sign
/// tracking; s may be any real with a, a+s away from poles.
double log_pochhammer(double a, double s, int& sign);

} // namespace frd::special
