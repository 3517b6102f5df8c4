#pragma once

// Driving data for the annulus Loewner ODE dw/dt = G(w, t):
//
//   r(t) > 0:  G(w,t) = w * ( i C(t) + (r'(t)/r(t)) p(w,t) ),
//   r(t) = 0:  G(w,t) = w * ( i C(t) - alpha(t) p(w,t) ),
//
// where p(., t) is the Herglotz representation of a piecewise-constant-in-t
// measure pair (mu1^t, mu2^t) on the unit circle (mu2 empty in the
// degenerate regime) and C, alpha are piecewise poly/exponential functions.
// Driving data can be time-changed (reparametrized): the result evaluates
// G*(w,t) = G(w, tau(t)) * tau'(t) by composition, keeping closed-form
// integrals available for the exact flow updates.

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "loewner/circle_measure.hpp"
#include "loewner/domain_system.hpp"
#include "loewner/kernel.hpp"
#include "loewner/time_function.hpp"

namespace loewner {

struct MeasurePair {
    CircleMeasure mu1;
    CircleMeasure mu2;

    double total_mass() const { return mu1.total_mass() + mu2.total_mass(); }
    bool atom_free() const { return mu1.atom_free() && mu2.atom_free(); }
};

// Right-continuous piecewise-constant measure pair; breakpoints strictly
// increasing, the first at t = 0.
class MeasureSchedule {
public:
    MeasureSchedule(std::vector<double> times, std::vector<MeasurePair> pairs);

    static MeasureSchedule constant(MeasurePair pair) {
        return MeasureSchedule({0.0}, {std::move(pair)});
    }

    const MeasurePair& at(double t) const;
    double nu(double t) const { return at(t).mu1.total_mass(); }

    const std::vector<double>& times() const { return times_; }
    const std::vector<MeasurePair>& pairs() const { return pairs_; }

private:
    std::vector<double> times_;
    std::vector<MeasurePair> pairs_;
};

// Increasing piecewise-C^1 time change with tau(0) = 0.
struct LinearTime {
    double scale; // tau = scale * t, scale > 0
};
struct ExpSaturateTime {
    double t_end; // tau = t_end * (1 - e^{-t}), t_end > 0
};
struct PiecewiseLinearTime {
    std::vector<double> t;   // knots, t[0] = 0
    std::vector<double> tau; // strictly increasing values, tau[0] = 0;
                             // extended past the last knot with the last slope
};

class TimeMap {
public:
    using Spec = std::variant<LinearTime, ExpSaturateTime, PiecewiseLinearTime>;

    explicit TimeMap(Spec spec);

    double operator()(double t) const;
    double deriv(double t) const; // right-hand derivative
    // Smallest t with tau(t) = u; +inf when u is never reached.
    double inverse(double u) const;
    // sup_t tau(t)
    double limit() const;
    std::vector<double> breakpoints() const;
    bool is_identity() const;

private:
    Spec spec_;
};

class DrivingData {
public:
    DrivingData(CanonicalSystem system, TimeFunction C, MeasureSchedule measures,
                TimeFunction alpha_post = TimeFunction::constant(0.0));

    // domain geometry
    double omega(double t) const;
    double r(double t) const;
    double log_r(double t) const;
    double log_deriv(double t) const; // throws DegenerateTimeError where omega = 0
    SystemKind kind() const;
    double degeneration_time() const; // +inf when non-degenerate
    double inv_omega_limit() const;

    // field ingredients
    double rotation(double t) const;                      // C(t)
    double rotation_integral(double a, double b) const;   // exact
    double alpha(double t) const;
    double alpha_integral(double a, double b) const;      // exact
    std::optional<double> alpha_tail_integral(double from) const;
    const MeasurePair& measures_at(double t) const;
    double nu(double t) const; // mass of mu1 at time t

    cplx eval_G(cplx w, double t, const KernelTolerance& tol = {}) const;
    // Re of the free term of G(., t)/(.): log_deriv * nu in the positive
    // regime, -alpha in the degenerate regime.
    double field_free_term(double t) const;

    // All finite times where the right-hand side changes analytic form,
    // sorted and deduplicated.
    std::vector<double> breakpoints() const;
    // nu on the final segment (evaluated past every breakpoint and T).
    double nu_tail(double T) const;

    // Driving data of the reflected family phi~ = r(t)/phi(r(s)/z):
    // measures swapped and mirrored, C negated.  Non-degenerate systems only.
    DrivingData reflected() const;

    bool is_direct() const;
    const CanonicalSystem& system() const;   // direct data only
    const TimeFunction& C() const;           // direct data only
    const MeasureSchedule& measures() const; // direct data only
    const TimeFunction& alpha_post() const;  // direct data only

    friend DrivingData reparametrize(const DrivingData& data, const TimeMap& tau);

private:
    struct Direct {
        CanonicalSystem system;
        TimeFunction C;
        MeasureSchedule measures;
        TimeFunction alpha_post;
    };
    struct Remapped {
        std::shared_ptr<const DrivingData> base;
        TimeMap tau;
    };

    explicit DrivingData(Remapped r) : impl_(std::move(r)) {}

    const Direct& direct() const;

    std::variant<Direct, Remapped> impl_;
};

// Time change G*(w,t) = G(w, tau(t)) tau'(t); the identity map returns the
// data unchanged.
DrivingData reparametrize(const DrivingData& data, const TimeMap& tau);

struct ValidationReport {
    struct Item {
        std::string condition;
        bool pass;
        std::string note;
    };
    std::vector<Item> items;
    bool integral_divergent = false;
    double integral_value = 0.0; // int alpha*nu over the positive regime (partial when divergent)
    double failure_time = 0.0;   // abscissa where divergence was declared
    bool pass = false;
};

// Checks the semicompleteness conditions; the quantitative one is the local
// integrability of alpha(t) * nu(t) up to the degeneration time, probed by
// adaptive quadrature with geometric refinement and divergence threshold
// `lambda`.
ValidationReport validate_driving(const DrivingData& data, double lambda = 30.0);

} // namespace loewner
