#pragma once

// Discrete winding numbers and the index-preservation / injectivity spot
// checks used to certify that evolution maps behave like annulus embeddings.

#include <span>

#include "loewner/solver.hpp"

namespace loewner {

// Winding of the closed polyline through `samples` (the closing edge back to
// the first sample is implicit) around 0, computed as the sum of principal
// argument increments over 2 pi.  Requires >= 4 samples, none equal to 0;
// throws SamplingError when the pre-rounding sum deviates from an integer by
// more than 0.1.
int winding_index(std::span<const cplx> samples);

// Winding of phi_{s,t} applied to the circle |z| = R (must enclose the inner
// boundary: r(s) < R < 1); an index-preserving map returns 1.
int check_index_preservation(const DrivingData& data, const SolverConfig& cfg,
                             double s, double t, double R,
                             std::size_t n_samples = 256);

// Maps a grid_size x grid_size polar grid in a compact sub-annulus of D_s and
// verifies pairwise-distinct images at a scale-aware tolerance.
bool univalence_spot_check(const DrivingData& data, const SolverConfig& cfg,
                           double s, double t, std::size_t grid_size = 12);

} // namespace loewner
