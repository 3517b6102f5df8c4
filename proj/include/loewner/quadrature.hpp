#pragma once

// Adaptive Gauss-Kronrod (G7, K15) quadrature, plus a divergence-aware
// accumulator for integrands that may blow up at the right endpoint (the
// degeneration time of a mixed system).  Header-only so callers can pass
// arbitrary callables without std::function overhead.

#include <cmath>
#include <cstddef>

#include "loewner/errors.hpp"

namespace loewner {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
};

namespace detail {

// QUADPACK dqk15 nodes and weights on [-1, 1].
inline constexpr double gk_x[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
inline constexpr double gk_wk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double gk_wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

template <class F>
QuadResult gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const double fc = f(c);
    double kron = gk_wk[7] * fc;
    double gauss = gk_wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * gk_x[i];
        const double fsum = f(c - dx) + f(c + dx);
        kron += gk_wk[i] * fsum;
        if (i % 2 == 1) gauss += gk_wg[i / 2] * fsum;
    }
    return {kron * h, std::abs(kron - gauss) * h};
}

template <class F>
void integrate_rec(const F& f, double a, double b, double tol, int depth,
                   QuadResult& acc) {
    const QuadResult q = gk15(f, a, b);
    if (q.error <= tol || depth <= 0) {
        if (depth <= 0 && q.error > tol * 64.0)
            throw TruncationError("integrate: adaptive depth exhausted");
        acc.value += q.value;
        acc.error += q.error;
        return;
    }
    const double m = 0.5 * (a + b);
    integrate_rec(f, a, m, 0.5 * tol, depth - 1, acc);
    integrate_rec(f, m, b, 0.5 * tol, depth - 1, acc);
}

} // namespace detail

template <class F>
QuadResult integrate(const F& f, double a, double b, double tol = 1e-11,
                     int max_depth = 48) {
    if (a == b) return {0.0, 0.0};
    QuadResult acc;
    detail::integrate_rec(f, a, b, tol, max_depth, acc);
    return acc;
}

struct BlowupResult {
    bool divergent = false;
    double value = 0.0;      // full integral, or partial sum when divergent
    double stopped_at = 0.0; // abscissa where accumulation stopped
};

// Integral of a nonnegative f over [a, b) where f may be singular at b.
// Windows shrink geometrically toward b; accumulation stops as soon as the
// partial sum exceeds `threshold` (divergence verdict) or the window
// contributions have decayed below tol (convergence).
template <class F>
BlowupResult integrate_toward_blowup(const F& f, double a, double b,
                                     double threshold, double tol = 1e-11) {
    BlowupResult out;
    if (!(a < b)) {
        out.stopped_at = b;
        return out;
    }
    double width = 0.5 * (b - a);
    double lo = a;
    double prev = -1.0;
    for (int k = 0; k < 1200; ++k) {
        const double hi = b - width;
        const double piece = integrate(f, lo, hi, tol).value;
        out.value += piece;
        out.stopped_at = hi;
        if (out.value > threshold) {
            out.divergent = true;
            return out;
        }
        if (piece <= tol && (prev >= 0.0 ? piece <= 0.5 * prev + tol : true) &&
            k >= 4)
            return out; // contributions died out; remaining tail negligible
        prev = piece;
        lo = hi;
        width *= 0.5;
        if (width == 0.0) return out;
    }
    throw TruncationError("integrate_toward_blowup: no verdict within window budget");
}

} // namespace loewner
