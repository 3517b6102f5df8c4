#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "loewner/driving.hpp"

namespace loewner::presets {

// nu == 1: G = w r'/r, flow w(t) = z r(t)/r(s).  Type III on HarmonicDecay.
DrivingData scaling(OmegaSpec sys = HarmonicDecay{1.0, 1.0});

// nu == 0 with constant rotation c: p vanishes, flow w(t) = e^{ic(t-s)} z.
// Type II on HarmonicDecay.
DrivingData rotation(double c = 1.0, OmegaSpec sys = HarmonicDecay{1.0, 1.0});

// Uniform masses nu and 1-nu: flow w(t) = z (r(t)/r(s))^nu.  Type IV on
// HarmonicDecay for 0 < nu < 1.
DrivingData split(double nu = 0.5, OmegaSpec sys = HarmonicDecay{1.0, 1.0});

// Split family over ExpApproach (omega -> omega_inf > 0): both integrals
// converge, type I.
DrivingData exp_approach(double nu = 0.5, double omega0 = 1.0,
                         double omega_inf = 0.5, double lambda = 1.0);

// Degenerate regime (omega == 0) with alpha == 1: G = -w, flow e^{-(t-s)} z.
// Type IV.
DrivingData degenerate_radial();

// Degenerate regime with alpha(t) = e^{-t}: the radial integral converges to
// 1, type II.
DrivingData degenerate_expdecay();

// AffineToZero(omega0, t_end) with nu == 0 before the degeneration time and
// uniform mu1 (alpha == 1) after; passes the semicompleteness validator.
DrivingData mixed_rotation(double c = 0.0, double omega0 = 1.0,
                           double t_end = 1.0);

// Same system with uniform masses nu / 1-nu before the degeneration time:
// int alpha nu diverges there, so the validator rejects it for nu > 0.
DrivingData mixed_split(double nu = 0.5, double omega0 = 1.0,
                        double t_end = 1.0);

// Two atoms plus uniform parts, drawn deterministically from the seed; total
// mass 1 with both mu1 and mu2 nonempty.
DrivingData seeded(std::uint64_t seed, OmegaSpec sys = HarmonicDecay{1.0, 1.0});

// The four pure-type presets plus the two degenerate ones, labeled.
std::vector<std::pair<std::string, DrivingData>> classification_suite();

} // namespace loewner::presets
