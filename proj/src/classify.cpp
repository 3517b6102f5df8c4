#include "loewner/classify.hpp"

#include <algorithm>
#include <cmath>

#include "loewner/quadrature.hpp"

namespace loewner {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// int_0^T_max (-r'/r) weight(nu) dt + closed-form tail, for non-degenerate
// data (the integrand is continuous; divergence can only come from the tail
// or from the partial sum crossing lambda).
template <class W>
IntegralOutcome radial_integral(const DrivingData& data, double T_max,
                                double lambda, const W& weight) {
    IntegralOutcome out;

    std::vector<double> cuts{0.0};
    for (double b : data.breakpoints())
        if (b < T_max) cuts.push_back(b);
    cuts.push_back(T_max);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i], b = cuts[i + 1];
        const double w_seg = weight(data.nu(0.5 * (a + b)));
        if (!(w_seg >= 0.0 && w_seg <= 1.0))
            throw DomainError("radial integral: weight outside [0, 1]");
        if (w_seg == 0.0) continue;
        auto f = [&](double t) {
            const double g = -data.log_deriv(t);
            if (!(g >= 0.0))
                throw DomainError("radial integral: -r'/r must be >= 0");
            return g * w_seg;
        };
        out.value += integrate(f, a, b, 1e-11).value;
        out.reached = b;
        if (out.value > lambda) {
            out.divergent = true;
            return out;
        }
    }

    // int_T^inf (-r'/r) dt = pi * (1/omega_inf - 1/omega(T))
    const double w_tail = weight(data.nu_tail(T_max));
    if (w_tail > 0.0) {
        const double tail_full = data.inv_omega_limit() - 1.0 / data.omega(T_max);
        if (tail_full == inf) {
            out.divergent = true;
            out.reached = T_max;
            return out;
        }
        out.value += pi * tail_full * w_tail;
    }
    out.reached = T_max;
    return out;
}

// int_0^{t_degen} (-r'/r) nu dt for mixed data, with geometric refinement
// toward the degeneration time.  For piecewise-constant nu this covers the
// regime completely: the final segment either has nu = 0 (zero contribution)
// or diverges past lambda.
IntegralOutcome positive_regime_integral(const DrivingData& data, double lambda) {
    IntegralOutcome out;
    const double t_degen = data.degeneration_time();
    if (t_degen <= 0.0) return out;

    std::vector<double> cuts{0.0};
    for (double b : data.breakpoints())
        if (b < t_degen) cuts.push_back(b);
    cuts.push_back(t_degen);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i], b = cuts[i + 1];
        const double nu_seg = data.nu(0.5 * (a + b));
        if (!(nu_seg >= 0.0 && nu_seg <= 1.0))
            throw DomainError("radial integral: nu outside [0, 1]");
        if (nu_seg == 0.0) continue;
        auto f = [&](double t) { return -data.log_deriv(t) * nu_seg; };
        if (b == t_degen) {
            const auto res =
                integrate_toward_blowup(f, a, b, lambda - out.value, 1e-11);
            out.value += res.value;
            out.reached = res.stopped_at;
            if (res.divergent) {
                out.divergent = true;
                return out;
            }
        } else {
            out.value += integrate(f, a, b, 1e-11).value;
            out.reached = b;
            if (out.value > lambda) {
                out.divergent = true;
                return out;
            }
        }
    }
    return out;
}

} // namespace

const char* to_string(ConformalType t) {
    switch (t) {
    case ConformalType::I: return "I";
    case ConformalType::II: return "II";
    case ConformalType::III: return "III";
    case ConformalType::IV: return "IV";
    }
    return "?";
}

const char* to_string(ProbeVerdict v) {
    return v == ProbeVerdict::tends_to_zero ? "tends_to_zero" : "bounded_away";
}

IntegralOutcome integral_I1(const DrivingData& data, double T_max, double lambda) {
    if (data.kind() != SystemKind::non_degenerate)
        throw DegenerateTimeError("integral_I1: non-degenerate data required");
    return radial_integral(data, T_max, lambda, [](double nu) { return nu; });
}

IntegralOutcome integral_I2(const DrivingData& data, double T_max, double lambda) {
    if (data.kind() != SystemKind::non_degenerate)
        throw DegenerateTimeError("integral_I2: non-degenerate data required");
    return radial_integral(data, T_max, lambda,
                           [](double nu) { return 1.0 - nu; });
}

IntegralOutcome integral_I_mixed(const DrivingData& data, double T_max,
                                 double lambda) {
    const double t_degen = data.degeneration_time();
    if (t_degen == inf)
        throw DegenerateTimeError("integral_I_mixed: mixed or degenerate data required");

    IntegralOutcome out = positive_regime_integral(data, lambda);
    if (out.divergent) return out;

    // degenerate regime: the integrand is alpha(t) (free-term mass is 1 there)
    if (T_max > t_degen) {
        out.value += data.alpha_integral(t_degen, T_max);
        out.reached = T_max;
        if (out.value > lambda) {
            out.divergent = true;
            return out;
        }
        const auto tail = data.alpha_tail_integral(T_max);
        if (!tail) {
            out.divergent = true;
            return out;
        }
        out.value += *tail;
        if (out.value > lambda) out.divergent = true;
    }
    return out;
}

ProbeVerdict trajectory_limit_probe(const DrivingData& data,
                                    const SolverConfig& cfg,
                                    const std::vector<cplx>& z_set,
                                    double T_big, double theta_zero) {
    if (z_set.empty())
        throw DomainError("trajectory_limit_probe: empty z_set");
    for (const cplx& z : z_set) {
        const Trajectory traj = evolve_point(data, cfg, 0.0, T_big, z);
        const double final_rho = traj.rho.back();
        bool zero;
        if (traj.status == TrajStatus::completed) {
            zero = final_rho < theta_zero;
        } else {
            // a halt on the inner side below theta_zero counts as convergence
            // to 0 (the limit dichotomy rules out re-ascending after pressing
            // the collapsing inner boundary); outer-side halts never do
            const double r_here = data.r(traj.halt_time);
            const bool inner_side = final_rho < 0.5 * (1.0 + r_here);
            zero = inner_side && final_rho < theta_zero;
        }
        if (zero) {
            // final quarter must decrease monotonically in modulus
            const std::size_t n = traj.rho.size();
            for (std::size_t k = n - std::max<std::size_t>(n / 4, 1); k < n; ++k)
                if (traj.rho[k] > traj.rho[k - 1] * (1.0 + 1e-10)) {
                    zero = false;
                    break;
                }
        }
        if (!zero) return ProbeVerdict::bounded_away;
    }
    return ProbeVerdict::tends_to_zero;
}

TypeReport classify_type(const DrivingData& data, const ClassifyConfig& cfg) {
    TypeReport rep;

    std::vector<cplx> z_set = cfg.z_set;
    if (z_set.empty()) {
        const double r0 = data.r(0.0);
        for (double f : {0.25, 0.5, 0.8})
            z_set.push_back(std::polar(r0 + f * (1.0 - r0), 0.7 + f));
    }

    if (data.kind() == SystemKind::non_degenerate) {
        rep.I1 = integral_I1(data, cfg.T_max, cfg.lambda);
        rep.I2 = integral_I2(data, cfg.T_max, cfg.lambda);
        const bool d1 = rep.I1->divergent, d2 = rep.I2->divergent;
        rep.declared_type = !d1 && !d2  ? ConformalType::I
                            : !d1 && d2 ? ConformalType::II
                            : d1 && !d2 ? ConformalType::III
                                        : ConformalType::IV;
        rep.probe_forward =
            trajectory_limit_probe(data, cfg.solver, z_set, cfg.T_big, cfg.theta_zero);
        rep.probe_reflected = trajectory_limit_probe(
            data.reflected(), cfg.solver, z_set, cfg.T_big, cfg.theta_zero);

        // forward trajectories die iff I1 diverges; reflected iff I2 does
        const bool fwd_zero = rep.probe_forward == ProbeVerdict::tends_to_zero;
        const bool ref_zero = *rep.probe_reflected == ProbeVerdict::tends_to_zero;
        rep.consistent = (fwd_zero == d1) && (ref_zero == d2);
    } else {
        rep.I = integral_I_mixed(data, cfg.T_max, cfg.lambda);
        rep.declared_type =
            rep.I->divergent ? ConformalType::IV : ConformalType::II;
        rep.probe_forward =
            trajectory_limit_probe(data, cfg.solver, z_set, cfg.T_big, cfg.theta_zero);
        rep.consistent = (rep.probe_forward == ProbeVerdict::tends_to_zero) ==
                         rep.I->divergent;
    }
    return rep;
}

} // namespace loewner
