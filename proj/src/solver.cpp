#include "loewner/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace loewner {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// difference between 5th- and 4th-order weights
constexpr double e1 = b1 - 5179.0 / 57600, e3 = b3 - 7571.0 / 16695,
                 e4 = b4 - 393.0 / 640, e5 = b5 + 92097.0 / 339200,
                 e6 = b6 - 187.0 / 2100, e7 = -1.0 / 40;

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

struct Guard {
    const DrivingData& data;
    double eps;
    bool hit(double t, cplx w) const {
        const double a = std::abs(w);
        if (a >= 1.0 - eps) return true;
        const double r = data.r(t);
        return a <= r + eps * (1.0 - r);
    }
};

// Field evaluation that never throws: returns NaN outside the domain or in
// guarded kernel zones so the step controller rejects and shrinks instead.
cplx safe_field(const DrivingData& data, const KernelTolerance& tol, cplx w,
                double t) {
    try {
        return data.eval_G(w, t, tol);
    } catch (const Error&) {
        return cplx(std::numeric_limits<double>::quiet_NaN(),
                    std::numeric_limits<double>::quiet_NaN());
    }
}

struct StepOutcome {
    bool ok = true;
    double halt_time = 0.0;
    TrajStatus status = TrajStatus::completed;
};

// Closed-form flow across [a, b] for atom-free measures:
//   w(b) = w(a) * exp( i * int C + nu * (log r(b) - log r(a)) )   (r > 0)
//   w(b) = w(a) * exp( i * int C - int alpha )                    (r = 0)
// Records `samples` interior points along the way and applies the guard.
StepOutcome exact_segment(const DrivingData& data, const Guard& guard,
                          double a, double b, Trajectory& traj, cplx& w) {
    const bool degenerate = data.omega(0.5 * (a + b)) == 0.0;
    const double nu = data.nu(0.5 * (a + b));
    const int samples = std::max(2, std::min(16, static_cast<int>((b - a) / 0.25) + 2));
    double lo = a;
    for (int k = 1; k <= samples; ++k) {
        const double hi = a + (b - a) * static_cast<double>(k) / samples;
        const double rot = data.rotation_integral(lo, hi);
        double radial;
        if (degenerate)
            radial = -data.alpha_integral(lo, hi);
        else if (nu == 0.0)
            radial = 0.0; // avoids 0 * (-inf) when the segment ends at T
        else
            radial = nu * (data.log_r(hi) - data.log_r(lo));
        w *= std::exp(cplx(radial, rot));
        traj.times.push_back(hi);
        traj.points.push_back(w);
        traj.rho.push_back(std::abs(w));
        if (guard.hit(hi, w))
            return {false, hi, TrajStatus::guard_hit};
        lo = hi;
    }
    return {};
}

StepOutcome rk_segment(const DrivingData& data, const SolverConfig& cfg,
                       const Guard& guard, double a, double b, Trajectory& traj,
                       cplx& w, std::size_t& steps_used) {
    double t = a;
    double h = std::min({cfg.max_step, b - a, 1e-2});
    cplx k1 = safe_field(data, cfg.kernel_tol, w, t);
    const double h_min = std::max((b - a) * 1e-14, 1e-300);

    while (t < b) {
        if (++steps_used > cfg.max_steps)
            return {false, t, TrajStatus::step_failure};
        h = std::min(h, b - t);
        if (!finite(k1)) return {false, t, TrajStatus::step_failure};

        const cplx k2 = safe_field(data, cfg.kernel_tol, w + h * (a21 * k1), t + c2 * h);
        const cplx k3 = safe_field(data, cfg.kernel_tol,
                                   w + h * (a31 * k1 + a32 * k2), t + c3 * h);
        const cplx k4 = safe_field(data, cfg.kernel_tol,
                                   w + h * (a41 * k1 + a42 * k2 + a43 * k3), t + c4 * h);
        const cplx k5 = safe_field(
            data, cfg.kernel_tol,
            w + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4), t + c5 * h);
        const cplx k6 = safe_field(
            data, cfg.kernel_tol,
            w + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5), t + h);
        const cplx w5 = w + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const cplx k7 = safe_field(data, cfg.kernel_tol, w5, t + h);
        const cplx err_c = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        bool reject;
        double ratio = 0.0;
        if (!finite(w5) || !finite(err_c)) {
            reject = true;
        } else {
            const double scale =
                cfg.abs_tol + cfg.rel_tol * std::max(std::abs(w), std::abs(w5));
            ratio = std::abs(err_c) / scale;
            reject = ratio > 1.0;
        }

        if (!reject) {
            t += h;
            w = w5;
            k1 = k7; // FSAL
            traj.times.push_back(t);
            traj.points.push_back(w);
            traj.rho.push_back(std::abs(w));
            if (guard.hit(t, w)) return {false, t, TrajStatus::guard_hit};
            const double grow =
                ratio > 0.0 ? 0.9 * std::pow(ratio, -0.2) : 5.0;
            h = std::min(cfg.max_step, h * std::clamp(grow, 0.2, 5.0));
        } else {
            const double shrink =
                ratio > 0.0 ? std::clamp(0.9 * std::pow(ratio, -0.2), 0.1, 0.5)
                            : 0.25;
            h *= shrink;
            if (h < h_min) return {false, t, TrajStatus::step_failure};
            k1 = safe_field(data, cfg.kernel_tol, w, t); // drop FSAL cache
        }
    }
    return {};
}

} // namespace

Trajectory evolve_point(const DrivingData& data, const SolverConfig& cfg,
                        double s, double t, cplx z) {
    if (!(s >= 0.0) || !(t >= s))
        throw DomainError("evolve_point: need 0 <= s <= t");
    const double rs = data.r(s);
    const double az = std::abs(z);
    if (!(az > rs && az < 1.0))
        throw DomainError("evolve_point: z outside D_s");

    Trajectory traj;
    traj.times.push_back(s);
    traj.points.push_back(z);
    traj.rho.push_back(az);
    if (t == s) return traj;

    std::vector<double> cuts{s};
    for (double b : data.breakpoints())
        if (b > s && b < t) cuts.push_back(b);
    cuts.push_back(t);
    std::sort(cuts.begin(), cuts.end());

    const Guard guard{data, cfg.boundary_guard};
    cplx w = z;
    std::size_t steps_used = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i], b = cuts[i + 1];
        const StepOutcome out =
            data.measures_at(0.5 * (a + b)).atom_free()
                ? exact_segment(data, guard, a, b, traj, w)
                : rk_segment(data, cfg, guard, a, b, traj, w, steps_used);
        if (!out.ok) {
            traj.status = out.status;
            traj.halt_time = out.halt_time;
            return traj;
        }
    }
    return traj;
}

cplx evolve_value(const DrivingData& data, const SolverConfig& cfg, double s,
                  double t, cplx z) {
    const Trajectory traj = evolve_point(data, cfg, s, t, z);
    if (traj.status != TrajStatus::completed)
        throw SolverError(traj.status == TrajStatus::guard_hit
                              ? "evolution halted at the domain boundary guard"
                              : "evolution step size underflow");
    return traj.value();
}

cplx reflected_evolve(const DrivingData& data, const SolverConfig& cfg,
                      double s, double t, cplx z) {
    const double rt = data.r(t);
    if (!(rt > 0.0))
        throw DegenerateTimeError("reflected_evolve: requires r(t) > 0");
    const double rs = data.r(s);
    const double az = std::abs(z);
    if (!(az > rs && az < 1.0))
        throw DomainError("reflected_evolve: z outside D_s");
    return rt / evolve_value(data, cfg, s, t, rs / z);
}

double semigroup_defect(const DrivingData& data, const SolverConfig& cfg,
                        double s, double u, double t, cplx z) {
    if (!(s <= u && u <= t))
        throw DomainError("semigroup_defect: need s <= u <= t");
    const cplx direct = evolve_value(data, cfg, s, t, z);
    const cplx mid = evolve_value(data, cfg, s, u, z);
    const cplx composed = evolve_value(data, cfg, u, t, mid);
    return std::abs(direct - composed);
}

} // namespace loewner
