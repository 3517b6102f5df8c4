#pragma once

// Evolution families phi_{s,t}: solves dw/dt = G(w,t), w(s) = z forward in
// time.  Integration proceeds segment-by-segment between driving breakpoints.
// On segments whose measures are atom-free the field is w times a scalar
// function of t and the flow is applied in closed form (exact exponentials of
// the rotation / radial integrals); atom-bearing segments use an embedded
// Dormand-Prince 5(4) pair with PI-free step control.

#include <vector>

#include "loewner/driving.hpp"

namespace loewner {

struct SolverConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_step = 0.5;
    double boundary_guard = 1e-9; // halt margin next to |w| = 1 and |w| = r(t)
    KernelTolerance kernel_tol{};
    std::size_t max_steps = 2'000'000;
};

enum class TrajStatus { completed, guard_hit, step_failure };

struct Trajectory {
    std::vector<double> times;
    std::vector<cplx> points;
    std::vector<double> rho; // moduli, same length
    TrajStatus status = TrajStatus::completed;
    double halt_time = 0.0; // meaningful when status != completed

    cplx value() const { return points.back(); }
    double final_time() const { return times.back(); }
};

// phi_{s,t}(z); requires 0 <= s <= t and z in D_s.  Outcome (including guard
// hits and step failures) is reported through the trajectory status.
Trajectory evolve_point(const DrivingData& data, const SolverConfig& cfg,
                        double s, double t, cplx z);

// Value of phi_{s,t}(z); throws SolverError unless the trajectory completed.
cplx evolve_value(const DrivingData& data, const SolverConfig& cfg, double s,
                  double t, cplx z);

// Reflected family phi~_{s,t}(z) = r(t) / phi_{s,t}(r(s)/z); non-degenerate
// systems only.
cplx reflected_evolve(const DrivingData& data, const SolverConfig& cfg,
                      double s, double t, cplx z);

// | phi_{s,t}(z) - phi_{u,t}(phi_{s,u}(z)) | for s <= u <= t.
double semigroup_defect(const DrivingData& data, const SolverConfig& cfg,
                        double s, double u, double t, cplx z);

} // namespace loewner
