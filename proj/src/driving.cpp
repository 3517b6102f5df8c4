#include "loewner/driving.hpp"

#include <algorithm>
#include <cmath>

#include "loewner/quadrature.hpp"

namespace loewner {

namespace {
constexpr double inf = std::numeric_limits<double>::infinity();
}

// ---------------------------------------------------------------- measures

MeasureSchedule::MeasureSchedule(std::vector<double> times,
                                 std::vector<MeasurePair> pairs)
    : times_(std::move(times)), pairs_(std::move(pairs)) {
    if (times_.empty() || times_.size() != pairs_.size())
        throw DomainError("MeasureSchedule: times and pairs must match and be non-empty");
    if (times_.front() != 0.0)
        throw DomainError("MeasureSchedule: first breakpoint must be t = 0");
    for (std::size_t i = 0; i + 1 < times_.size(); ++i)
        if (!(times_[i] < times_[i + 1]))
            throw DomainError("MeasureSchedule: breakpoints must be strictly increasing");
}

const MeasurePair& MeasureSchedule::at(double t) const {
    std::size_t i = times_.size() - 1;
    while (i > 0 && t < times_[i]) --i;
    return pairs_[i];
}

// ---------------------------------------------------------------- time map

TimeMap::TimeMap(Spec spec) : spec_(std::move(spec)) {
    struct V {
        void operator()(const LinearTime& s) const {
            if (!(s.scale > 0.0)) throw DomainError("TimeMap: scale must be > 0");
        }
        void operator()(const ExpSaturateTime& s) const {
            if (!(s.t_end > 0.0)) throw DomainError("TimeMap: t_end must be > 0");
        }
        void operator()(const PiecewiseLinearTime& s) const {
            if (s.t.size() != s.tau.size() || s.t.size() < 2)
                throw DomainError("TimeMap: need matching knot lists with >= 2 knots");
            if (s.t.front() != 0.0 || s.tau.front() != 0.0)
                throw DomainError("TimeMap: first knot must map 0 to 0");
            for (std::size_t i = 0; i + 1 < s.t.size(); ++i)
                if (!(s.t[i] < s.t[i + 1]) || !(s.tau[i] < s.tau[i + 1]))
                    throw DomainError("TimeMap: knots must be strictly increasing");
        }
    };
    std::visit(V{}, spec_);
}

double TimeMap::operator()(double t) const {
    struct V {
        double t;
        double operator()(const LinearTime& s) const { return s.scale * t; }
        double operator()(const ExpSaturateTime& s) const {
            return s.t_end * -std::expm1(-t);
        }
        double operator()(const PiecewiseLinearTime& s) const {
            std::size_t i = s.t.size() - 2;
            while (i > 0 && t < s.t[i]) --i;
            const double slope = (s.tau[i + 1] - s.tau[i]) / (s.t[i + 1] - s.t[i]);
            return s.tau[i] + slope * (t - s.t[i]);
        }
    };
    return std::visit(V{t}, spec_);
}

double TimeMap::deriv(double t) const {
    struct V {
        double t;
        double operator()(const LinearTime& s) const { return s.scale; }
        double operator()(const ExpSaturateTime& s) const {
            return s.t_end * std::exp(-t);
        }
        double operator()(const PiecewiseLinearTime& s) const {
            std::size_t i = s.t.size() - 2;
            while (i > 0 && t < s.t[i]) --i;
            if (t >= s.t[i + 1] && i + 2 == s.t.size())
                return (s.tau[i + 1] - s.tau[i]) / (s.t[i + 1] - s.t[i]);
            while (i + 2 < s.t.size() && t >= s.t[i + 1]) ++i;
            return (s.tau[i + 1] - s.tau[i]) / (s.t[i + 1] - s.t[i]);
        }
    };
    return std::visit(V{t}, spec_);
}

double TimeMap::inverse(double u) const {
    struct V {
        double u;
        double operator()(const LinearTime& s) const { return u / s.scale; }
        double operator()(const ExpSaturateTime& s) const {
            if (u >= s.t_end) return inf;
            return -std::log1p(-u / s.t_end);
        }
        double operator()(const PiecewiseLinearTime& s) const {
            std::size_t i = s.tau.size() - 2;
            while (i > 0 && u < s.tau[i]) --i;
            const double slope = (s.tau[i + 1] - s.tau[i]) / (s.t[i + 1] - s.t[i]);
            return s.t[i] + (u - s.tau[i]) / slope;
        }
    };
    if (u == 0.0) return 0.0;
    return std::visit(V{u}, spec_);
}

double TimeMap::limit() const {
    struct V {
        double operator()(const LinearTime&) const { return inf; }
        double operator()(const ExpSaturateTime& s) const { return s.t_end; }
        double operator()(const PiecewiseLinearTime&) const { return inf; }
    };
    return std::visit(V{}, spec_);
}

std::vector<double> TimeMap::breakpoints() const {
    if (const auto* p = std::get_if<PiecewiseLinearTime>(&spec_))
        return std::vector<double>(p->t.begin() + 1, p->t.end());
    return {};
}

bool TimeMap::is_identity() const {
    const auto* p = std::get_if<LinearTime>(&spec_);
    return p && p->scale == 1.0;
}

// ------------------------------------------------------------ driving data

DrivingData::DrivingData(CanonicalSystem system, TimeFunction C,
                         MeasureSchedule measures, TimeFunction alpha_post)
    : impl_(Direct{std::move(system), std::move(C), std::move(measures),
                   std::move(alpha_post)}) {
    auto& d = std::get<Direct>(impl_);
    const double t_degen = d.system.degeneration_time();

    // Normalize each measure segment against the regime it lives in.  A
    // segment straddling the degeneration time must satisfy both regimes'
    // constraints (mass 1 throughout, mu2 empty on the degenerate part).
    std::vector<MeasurePair> fixed;
    fixed.reserve(d.measures.pairs().size());
    const std::vector<double> times = d.measures.times();
    for (std::size_t i = 0; i < times.size(); ++i) {
        MeasurePair pair = d.measures.pairs()[i];
        const double seg_start = times[i];
        const double seg_end = (i + 1 < times.size()) ? times[i + 1] : inf;
        const bool touches_positive = seg_start < t_degen;
        const bool touches_degenerate = seg_end > t_degen;
        const double m1 = pair.mu1.total_mass();
        const double m2 = pair.mu2.total_mass();
        if (std::abs(m1 + m2 - 1.0) > 1e-9)
            throw MassConditionError("DrivingData: measure masses must sum to 1");
        if (touches_degenerate) {
            if (m2 > 1e-9)
                throw MassConditionError(
                    "DrivingData: mu2 must vanish in the degenerate regime");
            pair.mu2 = CircleMeasure::zero();
            pair.mu1 = pair.mu1.scaled(1.0 / m1);
        } else if (touches_positive) {
            const double total = m1 + m2;
            if (total != 1.0) {
                pair.mu1 = pair.mu1.scaled(1.0 / total);
                pair.mu2 = pair.mu2.scaled(1.0 / total);
            }
        }
        fixed.push_back(std::move(pair));
    }
    d.measures = MeasureSchedule(times, std::move(fixed));

    if (t_degen < inf) {
        // alpha drives the degenerate regime; it must be nonnegative there
        for (int k = 0; k <= 400; ++k) {
            const double t = t_degen + 0.1 * static_cast<double>(k);
            if (d.alpha_post(t) < 0.0)
                throw DomainError("DrivingData: alpha_post must be >= 0");
        }
    }
}

const DrivingData::Direct& DrivingData::direct() const {
    if (const auto* d = std::get_if<Direct>(&impl_)) return *d;
    throw DomainError("DrivingData: operation requires direct (non-reparametrized) data");
}

bool DrivingData::is_direct() const { return std::holds_alternative<Direct>(impl_); }
const CanonicalSystem& DrivingData::system() const { return direct().system; }
const TimeFunction& DrivingData::C() const { return direct().C; }
const MeasureSchedule& DrivingData::measures() const { return direct().measures; }
const TimeFunction& DrivingData::alpha_post() const { return direct().alpha_post; }

double DrivingData::omega(double t) const {
    if (const auto* d = std::get_if<Direct>(&impl_)) return d->system.omega(t);
    const auto& r = std::get<Remapped>(impl_);
    return r.base->omega(r.tau(t));
}

double DrivingData::r(double t) const {
    const double w = omega(t);
    return w > 0.0 ? std::exp(-pi / w) : 0.0;
}

double DrivingData::log_r(double t) const {
    const double w = omega(t);
    return w > 0.0 ? -pi / w : -inf;
}

double DrivingData::log_deriv(double t) const {
    if (const auto* d = std::get_if<Direct>(&impl_)) return d->system.log_deriv(t);
    const auto& r = std::get<Remapped>(impl_);
    return r.base->log_deriv(r.tau(t)) * r.tau.deriv(t);
}

SystemKind DrivingData::kind() const {
    if (const auto* d = std::get_if<Direct>(&impl_)) return d->system.kind();
    const auto& r = std::get<Remapped>(impl_);
    switch (r.base->kind()) {
    case SystemKind::non_degenerate:
        return SystemKind::non_degenerate;
    case SystemKind::degenerate:
        return SystemKind::degenerate;
    case SystemKind::mixed:
        break;
    }
    return r.tau.inverse(r.base->degeneration_time()) < inf ? SystemKind::mixed
                                                            : SystemKind::non_degenerate;
}

double DrivingData::degeneration_time() const {
    if (const auto* d = std::get_if<Direct>(&impl_))
        return d->system.degeneration_time();
    const auto& r = std::get<Remapped>(impl_);
    return r.tau.inverse(r.base->degeneration_time());
}

double DrivingData::inv_omega_limit() const {
    if (const auto* d = std::get_if<Direct>(&impl_))
        return d->system.inv_omega_limit();
    const auto& r = std::get<Remapped>(impl_);
    const double lim = r.tau.limit();
    if (lim == inf) return r.base->inv_omega_limit();
    const double w = r.base->omega(lim);
    return w > 0.0 ? 1.0 / w : inf;
}

double DrivingData::rotation(double t) const {
    if (const auto* d = std::get_if<Direct>(&impl_)) return d->C(t);
    const auto& r = std::get<Remapped>(impl_);
    return r.base->rotation(r.tau(t)) * r.tau.deriv(t);
}

double DrivingData::rotation_integral(double a, double b) const {
    if (const auto* d = std::get_if<Direct>(&impl_)) return d->C.integral(a, b);
    const auto& r = std::get<Remapped>(impl_);
    return r.base->rotation_integral(r.tau(a), r.tau(b));
}

double DrivingData::alpha(double t) const {
    if (const auto* d = std::get_if<Direct>(&impl_)) return d->alpha_post(t);
    const auto& r = std::get<Remapped>(impl_);
    return r.base->alpha(r.tau(t)) * r.tau.deriv(t);
}

double DrivingData::alpha_integral(double a, double b) const {
    if (const auto* d = std::get_if<Direct>(&impl_))
        return d->alpha_post.integral(a, b);
    const auto& r = std::get<Remapped>(impl_);
    return r.base->alpha_integral(r.tau(a), r.tau(b));
}

std::optional<double> DrivingData::alpha_tail_integral(double from) const {
    if (const auto* d = std::get_if<Direct>(&impl_))
        return d->alpha_post.tail_integral(from);
    const auto& r = std::get<Remapped>(impl_);
    const double lim = r.tau.limit();
    if (lim == inf) return r.base->alpha_tail_integral(r.tau(from));
    return r.base->alpha_integral(r.tau(from), lim);
}

const MeasurePair& DrivingData::measures_at(double t) const {
    if (const auto* d = std::get_if<Direct>(&impl_)) return d->measures.at(t);
    const auto& r = std::get<Remapped>(impl_);
    return r.base->measures_at(r.tau(t));
}

double DrivingData::nu(double t) const { return measures_at(t).mu1.total_mass(); }

cplx DrivingData::eval_G(cplx w, double t, const KernelTolerance& tol) const {
    if (const auto* rm = std::get_if<Remapped>(&impl_))
        return rm->base->eval_G(w, rm->tau(t), tol) * rm->tau.deriv(t);

    const auto& d = std::get<Direct>(impl_);
    const double om = d.system.omega(t);
    const MeasurePair& mp = d.measures.at(t);
    if (om > 0.0) {
        const double rr = std::exp(-pi / om);
        const cplx p = herglotz_eval(rr, mp.mu1, mp.mu2, w, tol);
        // p vanishes identically as r -> 0 when nu = 0; skip the log_deriv
        // factor then so the blow-up at the degeneration time cancels cleanly
        const cplx radial = (p == 0.0) ? cplx(0.0) : d.system.log_deriv(t) * p;
        return w * (cplx(0.0, d.C(t)) + radial);
    }
    const cplx p = herglotz_eval(0.0, mp.mu1, mp.mu2, w, tol);
    return w * (cplx(0.0, d.C(t)) - d.alpha_post(t) * p);
}

double DrivingData::field_free_term(double t) const {
    if (const auto* rm = std::get_if<Remapped>(&impl_))
        return rm->base->field_free_term(rm->tau(t)) * rm->tau.deriv(t);
    const auto& d = std::get<Direct>(impl_);
    const double om = d.system.omega(t);
    if (om > 0.0) {
        const double nu_t = d.measures.nu(t);
        return nu_t == 0.0 ? 0.0 : d.system.log_deriv(t) * nu_t;
    }
    return -d.alpha_post(t);
}

std::vector<double> DrivingData::breakpoints() const {
    std::vector<double> b;
    if (const auto* d = std::get_if<Direct>(&impl_)) {
        auto add = [&](const std::vector<double>& v) {
            b.insert(b.end(), v.begin(), v.end());
        };
        add(d->system.breakpoints());
        add(d->C.breakpoints());
        add(d->alpha_post.breakpoints());
        const auto& mt = d->measures.times();
        b.insert(b.end(), mt.begin() + 1, mt.end());
    } else {
        const auto& rm = std::get<Remapped>(impl_);
        for (double u : rm.base->breakpoints()) {
            const double t = rm.tau.inverse(u);
            if (t < inf) b.push_back(t);
        }
        const auto tb = rm.tau.breakpoints();
        b.insert(b.end(), tb.begin(), tb.end());
    }
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    b.erase(std::remove_if(b.begin(), b.end(), [](double t) { return t <= 0.0; }),
            b.end());
    return b;
}

double DrivingData::nu_tail(double T) const {
    const auto b = breakpoints();
    const double t_q = std::max(T, b.empty() ? 0.0 : b.back()) + 1.0;
    return nu(t_q);
}

DrivingData DrivingData::reflected() const {
    if (const auto* rm = std::get_if<Remapped>(&impl_)) {
        auto base_reflected =
            std::make_shared<const DrivingData>(rm->base->reflected());
        return DrivingData(Remapped{std::move(base_reflected), rm->tau});
    }
    const auto& d = std::get<Direct>(impl_);
    if (d.system.kind() != SystemKind::non_degenerate)
        throw DegenerateTimeError("reflected: requires a non-degenerate system");

    std::vector<TimeFunction::Piece> neg_pieces;
    for (const auto& p : d.C.pieces()) {
        TimeFunction::Piece q = p;
        if (q.exponential)
            q.coeffs[0] = -q.coeffs[0];
        else
            for (double& c : q.coeffs) c = -c;
        neg_pieces.push_back(std::move(q));
    }

    std::vector<MeasurePair> swapped;
    for (const auto& mp : d.measures.pairs())
        swapped.push_back({mp.mu2.mirrored(), mp.mu1.mirrored()});

    return DrivingData(d.system, TimeFunction(std::move(neg_pieces)),
                       MeasureSchedule(d.measures.times(), std::move(swapped)),
                       d.alpha_post);
}

DrivingData reparametrize(const DrivingData& data, const TimeMap& tau) {
    if (tau.is_identity()) return data;
    return DrivingData(DrivingData::Remapped{
        std::make_shared<const DrivingData>(data), tau});
}

// ---------------------------------------------------------------- validate

ValidationReport validate_driving(const DrivingData& data, double lambda) {
    ValidationReport rep;
    auto item = [&](const std::string& cond, bool pass, const std::string& note) {
        rep.items.push_back({cond, pass, note});
        return pass;
    };

    bool ok = true;

    // (i) measurability in t / holomorphy in w: guaranteed by the data types
    ok &= item("(i) measurable Herglotz family", true,
               "piecewise-constant measures, piecewise-smooth coefficients");

    // (ii) each p(., t) lies in the Herglotz class of its annulus
    bool masses_ok = true;
    std::string mass_note = "all segment masses normalized";
    std::vector<double> probe_times{0.0};
    for (double b : data.breakpoints()) {
        probe_times.push_back(b);
        probe_times.push_back(b + 1e-9);
    }
    probe_times.push_back(data.breakpoints().empty() ? 1.0
                                                     : data.breakpoints().back() + 1.0);
    for (double t : probe_times) {
        const auto& mp = data.measures_at(t);
        const double m1 = mp.mu1.total_mass(), m2 = mp.mu2.total_mass();
        if (std::abs(m1 + m2 - 1.0) > 1e-9) {
            masses_ok = false;
            mass_note = "mass violation at t = " + std::to_string(t);
            break;
        }
        if (data.omega(t) == 0.0 && m2 != 0.0) {
            masses_ok = false;
            mass_note = "mu2 mass in degenerate regime at t = " + std::to_string(t);
            break;
        }
    }
    ok &= item("(ii) Herglotz class membership", masses_ok, mass_note);

    // (iii) nu(t) = N(p(., t)) within [0, 1]
    bool nu_ok = true;
    for (double t : probe_times) {
        const double v = data.nu(t);
        if (!(v >= 0.0 && v <= 1.0)) {
            nu_ok = false;
            break;
        }
    }
    ok &= item("(iii) free-term mass in [0, 1]", nu_ok, "sampled at breakpoints");

    // (iv) C real and locally integrable: structural for piecewise poly/exp
    ok &= item("(iv) rotation coefficient locally integrable", true,
               "piecewise polynomial/exponential");

    const double t_degen = data.degeneration_time();

    // (v) alpha = -r'/r on the positive regime: holds by construction since
    // the field uses log_deriv there directly
    ok &= item("(v) alpha matches -r'/r before degeneration", true,
               "enforced structurally");

    // (vi) integrability of alpha(t) nu(t) up to the degeneration time
    bool integ_ok = true;
    std::string integ_note;
    double total = 0.0;
    if (t_degen == 0.0) {
        integ_note = "no positive regime; alpha piecewise-smooth is locally integrable";
    } else if (t_degen == std::numeric_limits<double>::infinity()) {
        integ_note = "non-degenerate system: -r'/r is continuous, locally integrable";
    } else {
        std::vector<double> cuts{0.0};
        for (double b : data.breakpoints())
            if (b < t_degen) cuts.push_back(b);
        cuts.push_back(t_degen);
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

        auto integrand = [&](double t) { return -data.field_free_term(t); };
        for (std::size_t i = 0; i + 1 < cuts.size() && integ_ok; ++i) {
            const double a = cuts[i], b = cuts[i + 1];
            const double nu_seg = data.nu(0.5 * (a + b));
            if (nu_seg == 0.0) continue; // integrand vanishes on the segment
            if (b == t_degen) {
                const auto res = integrate_toward_blowup(integrand, a, b,
                                                         lambda - total, 1e-11);
                total += res.value;
                if (res.divergent) {
                    integ_ok = false;
                    rep.failure_time = res.stopped_at;
                    integ_note = "integral of alpha*nu exceeds " +
                                 std::to_string(lambda) + " before t = " +
                                 std::to_string(t_degen);
                }
            } else {
                total += integrate(integrand, a, b, 1e-11).value;
                if (total > lambda) {
                    integ_ok = false;
                    rep.failure_time = b;
                    integ_note = "integral of alpha*nu exceeds threshold";
                }
            }
        }
        if (integ_ok)
            integ_note = "integral of alpha*nu over the positive regime is finite";
    }
    rep.integral_value = total;
    rep.integral_divergent = !integ_ok;
    ok &= item("(vi) alpha*nu locally integrable", integ_ok, integ_note);

    rep.pass = ok;
    return rep;
}

} // namespace loewner
