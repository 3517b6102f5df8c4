#pragma once

// Villat kernel and the Herglotz-type boundary representation on the annulus
// A_r = { r < |z| < 1 }.
//
// The kernel is evaluated from its Laurent expansion
//
//     K_r(z) = 1 + 2 * sum_{k>=1} ( z^k - (r^2/z)^k ) / (1 - r^{2k}),
//
// which converges geometrically with ratio max(|z|, r^2/|z|) on A_r and
// degenerates to the Schwarz kernel (1+z)/(1-z) at r = 0.  Functions with
// positive real part and unit free term are represented by a pair of
// probability-mass measures on the unit circle,
//
//     p(z) = int K_r(z/xi) dmu1(xi) + int (1 - K_r(r xi / z)) dmu2(xi),
//
// and a holomorphic function continuous up to the boundary is recovered from
// boundary data of its real part by the three-term reconstruction formula
// implemented in villat_reconstruct.

#include <span>

#include "loewner/circle_measure.hpp"
#include "loewner/errors.hpp"

namespace loewner {

struct KernelTolerance {
    double abs_tol = 1e-12;       // absolute truncation target for the series tail
    std::size_t max_terms = 1'000'000;
};

// K_r(z) for 0 <= r < 1 and r < |z| < 1.  Throws DomainError outside the
// annulus and TruncationError when |z| sits within 1e-6*(1-r) of the outer
// circle or the tail bound cannot reach tol.abs_tol within tol.max_terms.
cplx villat_eval(double r, cplx z, const KernelTolerance& tol = {});

// p(z) for the measure pair (mu1, mu2); total mass must equal 1 within 1e-12
// and mu2 must vanish when r = 0.  Uniform components are integrated
// analytically (the circle average of K_r(z/xi) is 1, of 1 - K_r(r xi/z) is 0).
cplx herglotz_eval(double r, const CircleMeasure& mu1, const CircleMeasure& mu2,
                   cplx z, const KernelTolerance& tol = {});

// Arithmetic mean of equispaced circle samples; the discrete free term.
// Requires at least 4 samples.
cplx free_term(std::span<const cplx> samples);

// Reconstructs f(z) from equispaced samples of Re f on the outer circle
// (|xi| = 1) and the inner circle (|xi| = r), plus the circle mean of Im f.
// Both sample vectors need at least 64 nodes; node j sits at angle 2*pi*j/n.
cplx villat_reconstruct(double r, std::span<const double> boundary_re_outer,
                        std::span<const double> boundary_re_inner,
                        double im_mean, cplx z, const KernelTolerance& tol = {});

} // namespace loewner
