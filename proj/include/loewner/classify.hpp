#pragma once

// Conformal-type classification of evolution families.  For non-degenerate
// systems the deciding quantities are
//
//   I1 = int_0^inf (-r'/r)(t) nu(t) dt,   I2 = int_0^inf (-r'/r)(t) (1 - nu(t)) dt,
//
// with the decision table
//
//   I1 + I2 < inf          -> type I      (equivalently r_inf > 0)
//   I1 < inf, I2 = inf     -> type II
//   I1 = inf, I2 < inf     -> type III
//   I1 = I2 = inf          -> type IV.
//
// Mixed and degenerate systems are decided by I = int_0^inf -Re N(G/w) dt:
// finite -> II, divergent -> IV.  Trajectory probes (the forward family and,
// in the non-degenerate case, the reflected one) cross-check the verdict.

#include <optional>

#include "loewner/solver.hpp"

namespace loewner {

struct IntegralOutcome {
    bool divergent = false;
    double value = 0.0;   // total (with analytic tail) or partial when divergent
    double reached = 0.0; // abscissa where accumulation stopped
};

struct ClassifyConfig {
    double T_max = 40.0;      // quadrature window for the integrals
    double lambda = 30.0;     // divergence threshold
    double T_big = 40.0;      // trajectory probe horizon
    double theta_zero = 0.02; // probe decision threshold
    SolverConfig solver{};
    std::vector<cplx> z_set{}; // empty: chosen from r(0)
};

enum class ConformalType { I, II, III, IV };
enum class ProbeVerdict { tends_to_zero, bounded_away };

const char* to_string(ConformalType t);
const char* to_string(ProbeVerdict v);

struct TypeReport {
    std::optional<IntegralOutcome> I1, I2; // non-degenerate path
    std::optional<IntegralOutcome> I;      // mixed/degenerate path
    ConformalType declared_type = ConformalType::I;
    ProbeVerdict probe_forward = ProbeVerdict::bounded_away;
    std::optional<ProbeVerdict> probe_reflected;
    bool consistent = false;
};

// int_0^inf (-r'/r) nu dt: adaptive quadrature over [0, T_max] plus the
// closed-form tail; divergent once the partial sum exceeds lambda or the
// analytic tail is infinite.  Non-degenerate data only.
IntegralOutcome integral_I1(const DrivingData& data, double T_max = 40.0,
                            double lambda = 30.0);
// Same with weight 1 - nu.
IntegralOutcome integral_I2(const DrivingData& data, double T_max = 40.0,
                            double lambda = 30.0);
// int_0^inf -Re N(G/w) dt for mixed/degenerate data: the (-r'/r) nu part up
// to the degeneration time (geometric refinement toward it) plus the alpha
// part beyond, with its exact tail.
IntegralOutcome integral_I_mixed(const DrivingData& data, double T_max = 40.0,
                                 double lambda = 30.0);

// Evolves each z in z_set from 0 to T_big; tends_to_zero iff every
// trajectory ends (or halts at the inner side) below theta_zero with a
// monotone decreasing final quarter.
ProbeVerdict trajectory_limit_probe(const DrivingData& data,
                                    const SolverConfig& cfg,
                                    const std::vector<cplx>& z_set,
                                    double T_big = 40.0,
                                    double theta_zero = 0.02);

TypeReport classify_type(const DrivingData& data, const ClassifyConfig& cfg = {});

} // namespace loewner
