#pragma once

// Test-side oracles, implemented independently of the library evaluators.

#include <complex>

#include "loewner/circle_measure.hpp"

namespace oracles {

using loewner::cplx;
using loewner::two_pi;

// Symmetric partial sums of the kernel's product form
// sum_{v=-n}^{n} (1 + r^{2v} z) / (1 - r^{2v} z), accumulated in +-v pairs so
// each added pair decays like r^{2v}.
inline cplx kernel_symmetric_sum(double r, cplx z) {
    cplx total = (1.0 + z) / (1.0 - z);
    if (r == 0.0) return total;
    const double r2 = r * r;
    double r2v = 1.0;
    for (int v = 1; v <= 4000; ++v) {
        r2v *= r2;
        const cplx u = r2v * z;
        const cplx pair = (1.0 + u) / (1.0 - u) + (r2v + z) / (r2v - z);
        total += pair;
        if (v > 3 && std::abs(pair) < 1e-14) break;
    }
    return total;
}

// Equispaced trapezoid average of fn over the circle |z| = rho.
template <class Fn>
cplx circle_mean(double rho, int n, Fn&& fn) {
    cplx sum = 0.0;
    for (int j = 0; j < n; ++j)
        sum += fn(std::polar(rho, two_pi * j / n));
    return sum / static_cast<double>(n);
}

// Centered finite difference of a scalar function of time.
template <class Fn>
double fd_deriv(Fn&& f, double t, double h) {
    return (f(t + h) - f(t - h)) / (2.0 * h);
}

// Composite Simpson rule with n (even) panels; independent of the library's
// adaptive quadrature.
template <class Fn>
double simpson(Fn&& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

} // namespace oracles
