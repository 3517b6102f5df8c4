#pragma once

#include <utility>
#include <vector>

#include "loewner/classify.hpp"
#include "loewner/solver.hpp"

namespace loewner {

// Finite-horizon Loewner chain f_t := phi_{t,T}.  The compatibility identity
// f_s = f_t o phi_{s,t} holds at the level of the flow itself (both sides
// integrate the same field from s to T through t), so its defect measures
// pure solver error.  Orientation is +1: horizon maps preserve the index.
struct ChainApproximation {
    DrivingData data;
    double horizon;
    SolverConfig cfg;
    int orientation = +1;

    ChainApproximation(DrivingData d, double T, SolverConfig c = {});
};

// f_t(z) = phi_{t,T}(z); requires t <= T and z in D_t.
cplx chain_eval(const ChainApproximation& chain, double t, cplx z);

// |f_s(z) - f_t(phi_{s,t}(z))| for 0 <= s <= t <= T.
double chain_compat_defect(const ChainApproximation& chain, double s, double t,
                           cplx z);

// Image of the circle C(0,R) under f_t, n equally spaced samples, evaluated
// concurrently.
std::vector<cplx> chain_circle_image(const ChainApproximation& chain, double t,
                                     double R, std::size_t n);

// |f_t(z)| <= pi / sqrt(2 log(1/|z|)) + 1e-9 for every (t, z) sample: the
// bound for univalent index-preserving maps into the punctured disk.
bool boundary_bound_check(const ChainApproximation& chain,
                          const std::vector<std::pair<double, cplx>>& samples);

// f_t(z) lies in the outer component of f_t(C(0,R)) whenever r(t) < R < |z|:
// the winding index of the image circle about f_t(z) is 0.
bool out_domain_check(const ChainApproximation& chain, double t, double R,
                      cplx z, std::size_t n = 512);

// |(f_{s+h}(z) - f_{s-h}(z)) / 2h + G(z,s) f_s'(z)|, the sampled defect of
// d f_s(z)/ds = -G(z,s) f_s'(z); f_s' by fourth-order finite difference.
// O(h^2) plus solver error on smooth driving segments.
double pde_residual_check(const ChainApproximation& chain, double s, cplx z,
                          double h);

struct RangeEstimate {
    double min_modulus = 0.0;
    double max_modulus = 0.0;
    ConformalType label = ConformalType::I;
};

// Observed modulus bounds of f_t images over a (t, z) grid plus the declared
// conformal type of the driving data.
RangeEstimate loewner_range_estimate(
    const ChainApproximation& chain,
    const std::vector<std::pair<double, cplx>>& grid,
    const ClassifyConfig& ccfg = {});

} // namespace loewner
