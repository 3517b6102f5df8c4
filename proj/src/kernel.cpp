#include "loewner/kernel.hpp"

#include <cmath>

namespace loewner {

namespace {

// Geometric tail of the Laurent series after K terms:
//   2 * (a^K + b^K) / ((1 - r^2) * (1 - max(a, b))),  a = |z|, b = r^2/|z|.
double tail_bound(double r, double a, double b, double aK, double bK) {
    const double ratio = std::max(a, b);
    return 2.0 * (aK + bK) / ((1.0 - r * r) * (1.0 - ratio));
}

} // namespace

cplx villat_eval(double r, cplx z, const KernelTolerance& tol) {
    if (!(r >= 0.0 && r < 1.0))
        throw DomainError("villat_eval: need 0 <= r < 1");
    const double a = std::abs(z);
    if (!(a > r && a < 1.0))
        throw DomainError("villat_eval: z outside the annulus r < |z| < 1");
    if (1.0 - a < 1e-6 * (1.0 - r))
        throw TruncationError("villat_eval: z too close to the outer circle");
    if (r == 0.0)
        return (1.0 + z) / (1.0 - z);

    const cplx zn = z;              // z^k accumulator
    const cplx wn = (r * r) / z;    // (r^2/z)^k accumulator
    const double b = std::abs(wn);
    cplx sum = 0.0;
    cplx zk = 1.0, wk = 1.0;
    double r2k = 1.0;               // r^{2k}
    const double r2 = r * r;
    double aK = 1.0, bK = 1.0;
    for (std::size_t k = 1; k <= tol.max_terms; ++k) {
        zk *= zn;
        wk *= wn;
        r2k *= r2;
        sum += (zk - wk) / (1.0 - r2k);
        aK *= a;
        bK *= b;
        if (tail_bound(r, a, b, aK, bK) < tol.abs_tol)
            return 1.0 + 2.0 * sum;
    }
    throw TruncationError("villat_eval: tail bound not met within max_terms");
}

cplx herglotz_eval(double r, const CircleMeasure& mu1, const CircleMeasure& mu2,
                   cplx z, const KernelTolerance& tol) {
    const double m1 = mu1.total_mass();
    const double m2 = mu2.total_mass();
    if (std::abs(m1 + m2 - 1.0) > 1e-12)
        throw MassConditionError("herglotz_eval: total mass must be 1");
    if (r == 0.0 && m2 != 0.0)
        throw MassConditionError("herglotz_eval: mu2 must vanish at r = 0");
    const double a = std::abs(z);
    if (!(a > r && a < 1.0))
        throw DomainError("herglotz_eval: z outside the annulus r < |z| < 1");

    cplx p = mu1.uniform_mass(); // circle average of K_r(z/xi) is 1
    for (const auto& atom : mu1.atoms()) {
        const cplx xi = std::polar(1.0, atom.angle);
        p += atom.weight * villat_eval(r, z / xi, tol);
    }
    // uniform part of mu2 contributes 0
    for (const auto& atom : mu2.atoms()) {
        const cplx xi = std::polar(1.0, atom.angle);
        p += atom.weight * (1.0 - villat_eval(r, r * xi / z, tol));
    }
    return p;
}

cplx free_term(std::span<const cplx> samples) {
    if (samples.size() < 4)
        throw SamplingError("free_term: need at least 4 samples");
    cplx s = 0.0;
    for (const cplx& v : samples) s += v;
    return s / static_cast<double>(samples.size());
}

cplx villat_reconstruct(double r, std::span<const double> boundary_re_outer,
                        std::span<const double> boundary_re_inner,
                        double im_mean, cplx z, const KernelTolerance& tol) {
    if (!(r > 0.0 && r < 1.0))
        throw DomainError("villat_reconstruct: need 0 < r < 1");
    if (boundary_re_outer.size() < 64 || boundary_re_inner.size() < 64)
        throw SamplingError("villat_reconstruct: need >= 64 boundary samples");
    const double a = std::abs(z);
    if (!(a > r && a < 1.0))
        throw DomainError("villat_reconstruct: z outside the annulus");

    const std::size_t n = boundary_re_outer.size();
    cplx outer = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const cplx xi = std::polar(1.0, two_pi * static_cast<double>(j) / static_cast<double>(n));
        outer += villat_eval(r, z / xi, tol) * boundary_re_outer[j];
    }
    outer /= static_cast<double>(n);

    const std::size_t m = boundary_re_inner.size();
    cplx inner = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const cplx xi = std::polar(1.0, two_pi * static_cast<double>(j) / static_cast<double>(m));
        inner += (villat_eval(r, r * xi / z, tol) - 1.0) * boundary_re_inner[j];
    }
    inner /= static_cast<double>(m);

    return outer + inner + cplx(0.0, im_mean);
}

} // namespace loewner
