#include "loewner/presets.hpp"

#include <random>

namespace loewner::presets {

namespace {

// 53-bit uniform draw in [0, 1)
double unit_draw(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

MeasurePair uniform_pair(double nu) {
    return {CircleMeasure::uniform(nu), CircleMeasure::uniform(1.0 - nu)};
}

} // namespace

DrivingData scaling(OmegaSpec sys) {
    return DrivingData(CanonicalSystem(std::move(sys)), TimeFunction::constant(0.0),
                       MeasureSchedule::constant(uniform_pair(1.0)));
}

DrivingData rotation(double c, OmegaSpec sys) {
    return DrivingData(CanonicalSystem(std::move(sys)), TimeFunction::constant(c),
                       MeasureSchedule::constant(uniform_pair(0.0)));
}

DrivingData split(double nu, OmegaSpec sys) {
    return DrivingData(CanonicalSystem(std::move(sys)), TimeFunction::constant(0.0),
                       MeasureSchedule::constant(uniform_pair(nu)));
}

DrivingData exp_approach(double nu, double omega0, double omega_inf,
                         double lambda) {
    return split(nu, ExpApproach{omega0, omega_inf, lambda});
}

DrivingData degenerate_radial() {
    return DrivingData(CanonicalSystem(IdenticallyZero{}),
                       TimeFunction::constant(0.0),
                       MeasureSchedule::constant(uniform_pair(1.0)),
                       TimeFunction::constant(1.0));
}

DrivingData degenerate_expdecay() {
    return DrivingData(CanonicalSystem(IdenticallyZero{}),
                       TimeFunction::constant(0.0),
                       MeasureSchedule::constant(uniform_pair(1.0)),
                       TimeFunction::exponential(1.0, -1.0));
}

DrivingData mixed_rotation(double c, double omega0, double t_end) {
    MeasureSchedule sched({0.0, t_end},
                          {uniform_pair(0.0), uniform_pair(1.0)});
    return DrivingData(CanonicalSystem(AffineToZero{omega0, t_end}),
                       TimeFunction::constant(c), std::move(sched),
                       TimeFunction::constant(1.0));
}

DrivingData mixed_split(double nu, double omega0, double t_end) {
    MeasureSchedule sched({0.0, t_end},
                          {uniform_pair(nu), uniform_pair(1.0)});
    return DrivingData(CanonicalSystem(AffineToZero{omega0, t_end}),
                       TimeFunction::constant(0.0), std::move(sched),
                       TimeFunction::constant(1.0));
}

DrivingData seeded(std::uint64_t seed, OmegaSpec sys) {
    std::mt19937_64 gen(seed);
    const double th1 = two_pi * unit_draw(gen);
    const double th2 = two_pi * unit_draw(gen);
    const double a1 = 0.05 + 0.15 * unit_draw(gen);
    const double a2 = 0.05 + 0.15 * unit_draw(gen);
    const double u1 = 0.10 + 0.20 * unit_draw(gen);
    const double u2 = 1.0 - a1 - a2 - u1; // >= 0.3 by the ranges above
    const CircleMeasure mu1({{th1, a1}}, u1);
    const CircleMeasure mu2({{th2, a2}}, u2);
    return DrivingData(CanonicalSystem(std::move(sys)), TimeFunction::constant(0.0),
                       MeasureSchedule::constant({mu1, mu2}));
}

std::vector<std::pair<std::string, DrivingData>> classification_suite() {
    std::vector<std::pair<std::string, DrivingData>> suite;
    suite.emplace_back("exp_approach", exp_approach());
    suite.emplace_back("rotation", rotation());
    suite.emplace_back("scaling", scaling());
    suite.emplace_back("split", split());
    suite.emplace_back("degenerate_radial", degenerate_radial());
    suite.emplace_back("degenerate_expdecay", degenerate_expdecay());
    return suite;
}

} // namespace loewner::presets
