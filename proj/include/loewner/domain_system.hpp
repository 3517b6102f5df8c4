#pragma once

// Canonical domain systems: the annulus family D_t = A_{r(t)} encoded by a
// non-increasing conformal-grade function omega(t) >= 0 through
//
//     r(t) = exp(-pi / omega(t))   (r = 0 where omega = 0).
//
// omega > 0 everywhere: non-degenerate system; omega == 0 from some finite
// threshold on: mixed; omega identically 0: degenerate.  The logarithmic
// derivative r'(t)/r(t) = pi * omega'(t) / omega(t)^2 <= 0 drives the radial
// part of the vector field and blows up at the degeneration time.

#include <limits>
#include <variant>
#include <vector>

#include "loewner/errors.hpp"

namespace loewner {

struct ConstantOmega {
    double omega0;
};

// omega(t) = omega0 * max(0, 1 - t/t_end); degenerates at t_end.
struct AffineToZero {
    double omega0;
    double t_end;
};

// omega(t) = omega0 / (1 + lambda t); positive for all t, r(t) -> 0.
struct HarmonicDecay {
    double omega0;
    double lambda;
};

// omega(t) = omega_inf + (omega0 - omega_inf) e^{-lambda t}; r(t) -> r_inf > 0.
struct ExpApproach {
    double omega0;
    double omega_inf;
    double lambda;
};

struct IdenticallyZero {};

// Piecewise-linear non-increasing omega through knots (t[i], value[i]),
// constant after the last knot; t[0] must be 0.
struct PiecewiseLinearOmega {
    std::vector<double> t;
    std::vector<double> value;
};

using OmegaSpec = std::variant<ConstantOmega, AffineToZero, HarmonicDecay,
                               ExpApproach, IdenticallyZero, PiecewiseLinearOmega>;

enum class SystemKind { non_degenerate, mixed, degenerate };

class CanonicalSystem {
public:
    explicit CanonicalSystem(OmegaSpec spec);

    double omega(double t) const;
    double omega_deriv(double t) const; // right-hand derivative at breakpoints

    double r_of_t(double t) const;      // exp(-pi/omega), 0 where omega = 0
    double log_r(double t) const;       // -pi/omega, -inf where omega = 0

    // r'(t)/r(t); throws DegenerateTimeError where omega(t) = 0.
    double log_deriv(double t) const;

    SystemKind kind() const { return kind_; }
    // Degeneration threshold; +inf for non-degenerate, 0 for degenerate.
    double degeneration_time() const { return t_degen_; }

    // lim_{t->inf} 1/omega(t); +inf when omega -> 0.
    double inv_omega_limit() const;

    // Times where the right-hand side changes analytic form.
    std::vector<double> breakpoints() const;

    const OmegaSpec& spec() const { return spec_; }

private:
    OmegaSpec spec_;
    SystemKind kind_;
    double t_degen_ = std::numeric_limits<double>::infinity();
};

// log(r2/r1) / (2 pi); requires 0 < r1 < r2 <= 1.
double module_of_annulus(double r1, double r2);

} // namespace loewner
