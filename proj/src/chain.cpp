#include "loewner/chain.hpp"

#include <algorithm>
#include <cmath>

#include "loewner/parallel.hpp"
#include "loewner/winding.hpp"

namespace loewner {

ChainApproximation::ChainApproximation(DrivingData d, double T, SolverConfig c)
    : data(std::move(d)), horizon(T), cfg(c) {
    if (!(T > 0.0)) throw DomainError("chain horizon must be positive");
}

cplx chain_eval(const ChainApproximation& chain, double t, cplx z) {
    if (!(t >= 0.0 && t <= chain.horizon))
        throw DomainError("chain_eval: t outside [0, T]");
    if (t == chain.horizon) return z;
    return evolve_value(chain.data, chain.cfg, t, chain.horizon, z);
}

double chain_compat_defect(const ChainApproximation& chain, double s, double t,
                           cplx z) {
    if (!(0.0 <= s && s <= t && t <= chain.horizon))
        throw DomainError("chain_compat_defect: need 0 <= s <= t <= T");
    const cplx direct = chain_eval(chain, s, z);
    const cplx via_t =
        chain_eval(chain, t, evolve_value(chain.data, chain.cfg, s, t, z));
    return std::abs(direct - via_t);
}

std::vector<cplx> chain_circle_image(const ChainApproximation& chain, double t,
                                     double R, std::size_t n) {
    if (n < 4) throw SamplingError("chain_circle_image: need n >= 4");
    std::vector<cplx> image(n);
    parallel_for(n, [&](std::size_t j) {
        const double theta = two_pi * static_cast<double>(j) / static_cast<double>(n);
        image[j] = chain_eval(chain, t, std::polar(R, theta));
    });
    return image;
}

bool boundary_bound_check(const ChainApproximation& chain,
                          const std::vector<std::pair<double, cplx>>& samples) {
    for (const auto& [t, z] : samples) {
        const double mod = std::abs(z);
        if (!(mod < 1.0)) throw DomainError("boundary_bound_check: |z| >= 1");
        const double bound = pi / std::sqrt(2.0 * std::log(1.0 / mod));
        if (std::abs(chain_eval(chain, t, z)) > bound + 1e-9) return false;
    }
    return true;
}

bool out_domain_check(const ChainApproximation& chain, double t, double R,
                      cplx z, std::size_t n) {
    if (!(chain.data.r(t) < R && R < std::abs(z) && std::abs(z) < 1.0))
        throw DomainError("out_domain_check: need r(t) < R < |z| < 1");
    std::vector<cplx> curve = chain_circle_image(chain, t, R, n);
    const cplx fz = chain_eval(chain, t, z);
    for (cplx& w : curve) w -= fz;
    return winding_index(curve) == 0;
}

double pde_residual_check(const ChainApproximation& chain, double s, cplx z,
                          double h) {
    if (!(h > 0.0 && s - h >= 0.0 && s + h <= chain.horizon))
        throw DomainError("pde_residual_check: stencil leaves [0, T]");
    const double d = 1e-4;
    const double rho = std::abs(z);
    if (!(rho - 2 * d > chain.data.r(s) && rho + 2 * d < 1.0))
        throw DomainError("pde_residual_check: z-stencil leaves the annulus");

    // fourth-order derivative in z (holomorphic, so a radial stencil suffices)
    const cplx dir = z / rho;
    auto f_s = [&](cplx w) { return chain_eval(chain, s, w); };
    const cplx fp = (8.0 * (f_s(z + d * dir) - f_s(z - d * dir)) -
                     (f_s(z + 2 * d * dir) - f_s(z - 2 * d * dir))) /
                    (12.0 * d * dir);

    const cplx dfdt = (chain_eval(chain, s + h, z) - chain_eval(chain, s - h, z)) / (2.0 * h);
    return std::abs(dfdt + chain.data.eval_G(z, s, chain.cfg.kernel_tol) * fp);
}

RangeEstimate loewner_range_estimate(
    const ChainApproximation& chain,
    const std::vector<std::pair<double, cplx>>& grid,
    const ClassifyConfig& ccfg) {
    if (grid.empty()) throw SamplingError("loewner_range_estimate: empty grid");
    RangeEstimate est;
    est.min_modulus = std::numeric_limits<double>::infinity();
    for (const auto& [t, z] : grid) {
        const double mod = std::abs(chain_eval(chain, t, z));
        est.min_modulus = std::min(est.min_modulus, mod);
        est.max_modulus = std::max(est.max_modulus, mod);
    }
    est.label = classify_type(chain.data, ccfg).declared_type;
    return est;
}

} // namespace loewner
