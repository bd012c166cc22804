#pragma once

#include <cmath>
#include <functional>
#include <utility>

namespace eit {

// Golden-section maximization of a unimodal function on [lo, hi].
// Fixed iteration count keeps the result deterministic.
template <typename F>
double golden_max(F&& f, double lo, double hi, int iters = 90) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

template <typename F>
double golden_min(F&& f, double lo, double hi, int iters = 90) {
    return golden_max([&](double x) { return -f(x); }, lo, hi, iters);
}

// Bisection root of f on [lo, hi]; f(lo) and f(hi) must bracket a sign
// change.
template <typename F>
double bisect(F&& f, double lo, double hi, int iters = 200) {
    double flo = f(lo);
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((flo <= 0.0) == (fm <= 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Peak height, location and full width at half maximum of a unimodal peak
// of f inside [lo, hi], located numerically.
struct PeakShape {
    double position = 0.0;
    double height = 0.0;
    double fwhm = 0.0;
};

template <typename F>
PeakShape measure_peak(F&& f, double lo, double hi) {
    PeakShape p;
    p.position = golden_max(f, lo, hi);
    p.height = f(p.position);
    const double half = p.height / 2.0;
    auto g = [&](double x) { return f(x) - half; };
    const double left = bisect(g, lo, p.position);
    const double right = bisect(g, p.position, hi);
    p.fwhm = right - left;
    return p;
}

}  // namespace eit
