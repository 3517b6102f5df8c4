#include "loewner/winding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace loewner {

namespace {

double min_pairwise_distance(const std::vector<cplx>& pts) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            best = std::min(best, std::abs(pts[i] - pts[j]));
    return best;
}

} // namespace

int winding_index(std::span<const cplx> samples) {
    std::size_t n = samples.size();
    if (n >= 2 && samples.front() == samples.back()) --n; // explicitly closed
    if (n < 4)
        throw SamplingError("winding_index: need at least 4 distinct samples");
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const cplx a = samples[k];
        const cplx b = samples[(k + 1) % n];
        if (a == 0.0 || b == 0.0)
            throw DomainError("winding_index: curve passes through 0");
        total += std::arg(b / a);
    }
    const double turns = total / two_pi;
    const double nearest = std::round(turns);
    if (std::abs(turns - nearest) > 0.1)
        throw SamplingError("winding_index: sampling too coarse to trust");
    return static_cast<int>(nearest);
}

int check_index_preservation(const DrivingData& data, const SolverConfig& cfg,
                             double s, double t, double R,
                             std::size_t n_samples) {
    const double rs = data.r(s);
    if (!(R > rs && R < 1.0))
        throw DomainError("check_index_preservation: circle not inside D_s");
    std::vector<cplx> image(n_samples);
    for (std::size_t j = 0; j < n_samples; ++j) {
        const cplx z = std::polar(R, two_pi * static_cast<double>(j) /
                                         static_cast<double>(n_samples));
        image[j] = evolve_value(data, cfg, s, t, z);
    }
    return winding_index(image);
}

bool univalence_spot_check(const DrivingData& data, const SolverConfig& cfg,
                           double s, double t, std::size_t grid_size) {
    if (grid_size < 2)
        throw DomainError("univalence_spot_check: grid_size must be >= 2");
    const double rs = data.r(s);
    const double lo = rs + 0.15 * (1.0 - rs);
    const double hi = 1.0 - 0.15 * (1.0 - rs);

    std::vector<cplx> zs, fs;
    zs.reserve(grid_size * grid_size);
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double rad =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid_size - 1);
        for (std::size_t j = 0; j < grid_size; ++j) {
            const double ang = two_pi * static_cast<double>(j) / static_cast<double>(grid_size);
            zs.push_back(std::polar(rad, ang));
        }
    }
    fs.reserve(zs.size());
    for (const cplx& z : zs) fs.push_back(evolve_value(data, cfg, s, t, z));

    const double min_in = min_pairwise_distance(zs);
    const double min_out = min_pairwise_distance(fs);
    double diam_in = 0.0, diam_out = 0.0;
    for (std::size_t i = 0; i < zs.size(); ++i)
        for (std::size_t j = i + 1; j < zs.size(); ++j) {
            diam_in = std::max(diam_in, std::abs(zs[i] - zs[j]));
            diam_out = std::max(diam_out, std::abs(fs[i] - fs[j]));
        }
    // normal-family-style global Lipschitz scale of the map on the grid
    const double scale = diam_out / diam_in;
    return min_out >= 1e-3 * scale * min_in;
}

} // namespace loewner
