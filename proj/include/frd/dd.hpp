#pragma once

#include <cmath>

namespace frd {

// Minimal double-double accumulator (Dekker/Knuth error-free transforms).
// Used where alternating series lose digits to cancellation; ~31 significant
// decimal digits for sums of double-precision terms.

struct DD {
    double hi = 0.0;
    double lo = 0.0;

    DD() = default;
    explicit DD(double x) : hi(x), lo(0.0) {}
    DD(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }

    void add(double x) {
        // two_sum(hi, x) followed by lo absorption
        double s = hi + x;
        double bb = s - hi;
        double err = (hi - (s - bb)) + (x - bb);
        lo += err;
        hi = s;
        // renormalize
        double t = hi + lo;
        lo = lo - (t - hi);
        hi = t;
    }

    void add(const DD& x) {
        add(x.hi);
        add(x.lo);
    }
};

} // namespace frd
