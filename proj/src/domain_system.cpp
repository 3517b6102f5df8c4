#include "loewner/domain_system.hpp"

#include <cmath>

#include "loewner/circle_measure.hpp" // pi

namespace loewner {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

struct Validator {
    double operator()(const ConstantOmega& s) const {
        if (!(s.omega0 > 0.0)) throw DomainError("ConstantOmega: omega0 must be > 0");
        return inf;
    }
    double operator()(const AffineToZero& s) const {
        if (!(s.omega0 > 0.0) || !(s.t_end > 0.0))
            throw DomainError("AffineToZero: omega0 and t_end must be > 0");
        return s.t_end;
    }
    double operator()(const HarmonicDecay& s) const {
        if (!(s.omega0 > 0.0) || !(s.lambda > 0.0))
            throw DomainError("HarmonicDecay: omega0 and lambda must be > 0");
        return inf;
    }
    double operator()(const ExpApproach& s) const {
        if (!(s.omega0 > s.omega_inf) || !(s.omega_inf > 0.0) || !(s.lambda > 0.0))
            throw DomainError("ExpApproach: need omega0 > omega_inf > 0 and lambda > 0");
        return inf;
    }
    double operator()(const IdenticallyZero&) const { return 0.0; }
    double operator()(const PiecewiseLinearOmega& s) const {
        if (s.t.size() != s.value.size() || s.t.empty())
            throw DomainError("PiecewiseLinearOmega: knot lists must be non-empty and equal length");
        if (s.t.front() != 0.0)
            throw DomainError("PiecewiseLinearOmega: first knot must be at t = 0");
        for (std::size_t i = 0; i + 1 < s.t.size(); ++i)
            if (!(s.t[i] < s.t[i + 1]))
                throw DomainError("PiecewiseLinearOmega: knot times must be strictly increasing");
        for (std::size_t i = 0; i < s.value.size(); ++i) {
            if (!(s.value[i] >= 0.0))
                throw DomainError("PiecewiseLinearOmega: omega values must be >= 0");
            if (i + 1 < s.value.size() && s.value[i + 1] > s.value[i])
                throw DomainError("PiecewiseLinearOmega: omega must be non-increasing");
        }
        // omega is linear between knots with nonnegative values, so the first
        // zero is always attained at a knot
        for (std::size_t i = 0; i < s.value.size(); ++i)
            if (s.value[i] == 0.0) return s.t[i];
        return inf;
    }
};

} // namespace

CanonicalSystem::CanonicalSystem(OmegaSpec spec) : spec_(std::move(spec)) {
    t_degen_ = std::visit(Validator{}, spec_);
    if (t_degen_ == 0.0)
        kind_ = SystemKind::degenerate;
    else if (t_degen_ < inf)
        kind_ = SystemKind::mixed;
    else
        kind_ = SystemKind::non_degenerate;
}

double CanonicalSystem::omega(double t) const {
    if (!(t >= 0.0)) throw DomainError("CanonicalSystem::omega: need t >= 0");
    struct V {
        double t;
        double operator()(const ConstantOmega& s) const { return s.omega0; }
        double operator()(const AffineToZero& s) const {
            return s.omega0 * std::max(0.0, 1.0 - t / s.t_end);
        }
        double operator()(const HarmonicDecay& s) const {
            return s.omega0 / (1.0 + s.lambda * t);
        }
        double operator()(const ExpApproach& s) const {
            return s.omega_inf + (s.omega0 - s.omega_inf) * std::exp(-s.lambda * t);
        }
        double operator()(const IdenticallyZero&) const { return 0.0; }
        double operator()(const PiecewiseLinearOmega& s) const {
            if (t >= s.t.back()) return s.value.back();
            std::size_t i = 0;
            while (t >= s.t[i + 1]) ++i;
            const double f = (t - s.t[i]) / (s.t[i + 1] - s.t[i]);
            return s.value[i] + f * (s.value[i + 1] - s.value[i]);
        }
    };
    return std::visit(V{t}, spec_);
}

double CanonicalSystem::omega_deriv(double t) const {
    if (!(t >= 0.0)) throw DomainError("CanonicalSystem::omega_deriv: need t >= 0");
    struct V {
        double t;
        double operator()(const ConstantOmega&) const { return 0.0; }
        double operator()(const AffineToZero& s) const {
            return t < s.t_end ? -s.omega0 / s.t_end : 0.0;
        }
        double operator()(const HarmonicDecay& s) const {
            const double d = 1.0 + s.lambda * t;
            return -s.omega0 * s.lambda / (d * d);
        }
        double operator()(const ExpApproach& s) const {
            return -s.lambda * (s.omega0 - s.omega_inf) * std::exp(-s.lambda * t);
        }
        double operator()(const IdenticallyZero&) const { return 0.0; }
        double operator()(const PiecewiseLinearOmega& s) const {
            if (t >= s.t.back()) return 0.0;
            std::size_t i = 0;
            while (t >= s.t[i + 1]) ++i;
            return (s.value[i + 1] - s.value[i]) / (s.t[i + 1] - s.t[i]);
        }
    };
    return std::visit(V{t}, spec_);
}

double CanonicalSystem::r_of_t(double t) const {
    const double w = omega(t);
    return w > 0.0 ? std::exp(-pi / w) : 0.0;
}

double CanonicalSystem::log_r(double t) const {
    const double w = omega(t);
    return w > 0.0 ? -pi / w : -inf;
}

double CanonicalSystem::log_deriv(double t) const {
    const double w = omega(t);
    if (w == 0.0)
        throw DegenerateTimeError("log_deriv: omega(t) = 0");
    return pi * omega_deriv(t) / (w * w);
}

double CanonicalSystem::inv_omega_limit() const {
    struct V {
        double operator()(const ConstantOmega& s) const { return 1.0 / s.omega0; }
        double operator()(const AffineToZero&) const { return inf; }
        double operator()(const HarmonicDecay&) const { return inf; }
        double operator()(const ExpApproach& s) const { return 1.0 / s.omega_inf; }
        double operator()(const IdenticallyZero&) const { return inf; }
        double operator()(const PiecewiseLinearOmega& s) const {
            return s.value.back() > 0.0 ? 1.0 / s.value.back() : inf;
        }
    };
    return std::visit(V{}, spec_);
}

std::vector<double> CanonicalSystem::breakpoints() const {
    struct V {
        std::vector<double> operator()(const ConstantOmega&) const { return {}; }
        std::vector<double> operator()(const AffineToZero& s) const { return {s.t_end}; }
        std::vector<double> operator()(const HarmonicDecay&) const { return {}; }
        std::vector<double> operator()(const ExpApproach&) const { return {}; }
        std::vector<double> operator()(const IdenticallyZero&) const { return {}; }
        std::vector<double> operator()(const PiecewiseLinearOmega& s) const {
            return std::vector<double>(s.t.begin() + 1, s.t.end());
        }
    };
    return std::visit(V{}, spec_);
}

double module_of_annulus(double r1, double r2) {
    if (!(r1 > 0.0 && r1 < r2 && r2 <= 1.0))
        throw DomainError("module_of_annulus: need 0 < r1 < r2 <= 1");
    return std::log(r2 / r1) / two_pi;
}

} // namespace loewner
