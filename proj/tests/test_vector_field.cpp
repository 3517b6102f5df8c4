#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "loewner/driving.hpp"
#include "loewner/presets.hpp"
#include "oracles.hpp"

using namespace loewner;

TEST_CASE("TimeFunction values, integrals, tails") {
    // 3 + 2t - t^2 on [0, 1), then 4 e^{-2(t-1)}
    TimeFunction f({{0.0, false, {3.0, 2.0, -1.0}},
                    {1.0, true, {4.0, -2.0}}});
    CHECK(f(0.0) == 3.0);
    CHECK(f(0.5) == doctest::Approx(3.0 + 1.0 - 0.25).epsilon(1e-15));
    CHECK(f(1.0) == 4.0);
    CHECK(f(2.0) == doctest::Approx(4.0 * std::exp(-2.0)).epsilon(1e-15));

    // exact integral vs independent Simpson oracle across the breakpoint
    const double got = f.integral(0.3, 1.7);
    const double want =
        oracles::simpson([&](double t) { return f(t); }, 0.3, 1.0, 2000) +
        oracles::simpson([&](double t) { return f(t); }, 1.0, 1.7, 2000);
    CHECK(got == doctest::Approx(want).epsilon(1e-10));
    CHECK(f.integral(0.7, 0.7) == 0.0);

    // tail: 4 e^{-2(t-1)} integrates to 2 e^{-2(a-1)}
    auto tail = f.tail_integral(1.5);
    REQUIRE(tail.has_value());
    CHECK(*tail == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-12));
    auto tail0 = f.tail_integral(0.2);
    REQUIRE(tail0.has_value());
    CHECK(*tail0 == doctest::Approx(f.integral(0.2, 1.0) + 2.0).epsilon(1e-12));

    CHECK(!TimeFunction::constant(1.0).tail_integral(0.0).has_value());
    CHECK(!TimeFunction::polynomial({0.0, 2.0}).tail_integral(1.0).has_value());
    CHECK(!TimeFunction::exponential(1.0, 0.5).tail_integral(0.0).has_value());
    CHECK(!TimeFunction::exponential(1.0, 0.0).tail_integral(0.0).has_value());
    CHECK(TimeFunction::constant(0.0).tail_integral(3.0) == 0.0);
    CHECK(TimeFunction::exponential(0.0, 1.0).is_zero());

    CHECK_THROWS_AS(TimeFunction(std::vector<TimeFunction::Piece>{}), DomainError);
    CHECK_THROWS_AS(TimeFunction({{0.5, false, {1.0}}}), DomainError); // first piece not at 0
    CHECK_THROWS_AS(TimeFunction({{0.0, false, {1.0}}, {0.0, false, {2.0}}}),
                    DomainError); // non-increasing starts
    CHECK_THROWS_AS(TimeFunction({{0.0, true, {1.0}}}), DomainError); // exp needs 2 coeffs
    CHECK_THROWS_AS(TimeFunction({{0.0, false, {}}}), DomainError);
}

TEST_CASE("MeasureSchedule right-continuity") {
    MeasurePair a{CircleMeasure::uniform(1.0), CircleMeasure::zero()};
    MeasurePair b{CircleMeasure::uniform(0.25), CircleMeasure::uniform(0.75)};
    MeasureSchedule sched({0.0, 1.0}, {a, b});
    CHECK(sched.nu(0.0) == 1.0);
    CHECK(sched.nu(0.999999) == 1.0);
    CHECK(sched.nu(1.0) == 0.25);   // right-continuous at the break
    CHECK(sched.nu(5.0) == 0.25);
    CHECK(sched.at(2.0).mu2.uniform_mass() == 0.75);

    CHECK_THROWS_AS(MeasureSchedule({0.5}, {a}), DomainError);
    CHECK_THROWS_AS(MeasureSchedule({0.0, 0.0}, {a, b}), DomainError);
    CHECK_THROWS_AS(MeasureSchedule({0.0}, {a, b}), DomainError);
}

TEST_CASE("DrivingData mass handling") {
    CanonicalSystem sys(HarmonicDecay{1.0, 1.0});

    // off-by-more-than-1e-9 total mass is rejected
    MeasurePair bad{CircleMeasure::uniform(0.6), CircleMeasure::uniform(0.3)};
    CHECK_THROWS_AS(DrivingData(sys, TimeFunction::constant(0.0),
                                MeasureSchedule::constant(bad)),
                    MassConditionError);

    // tiny defect is renormalized away (to 1 up to rounding of the rescale)
    MeasurePair near{CircleMeasure::uniform(0.6 + 2e-10), CircleMeasure::uniform(0.4)};
    DrivingData d(CanonicalSystem(HarmonicDecay{1.0, 1.0}),
                  TimeFunction::constant(0.0), MeasureSchedule::constant(near));
    CHECK(std::abs(d.measures_at(0.0).total_mass() - 1.0) <= 1e-15);

    // mu2 on a degenerate segment is rejected
    MeasurePair with_mu2{CircleMeasure::uniform(0.5), CircleMeasure::uniform(0.5)};
    CHECK_THROWS_AS(DrivingData(CanonicalSystem(IdenticallyZero{}),
                                TimeFunction::constant(0.0),
                                MeasureSchedule::constant(with_mu2),
                                TimeFunction::constant(1.0)),
                    MassConditionError);

    // negative alpha on the degenerate regime is rejected
    MeasurePair mu1_only{CircleMeasure::uniform(1.0), CircleMeasure::zero()};
    CHECK_THROWS_AS(DrivingData(CanonicalSystem(IdenticallyZero{}),
                                TimeFunction::constant(0.0),
                                MeasureSchedule::constant(mu1_only),
                                TimeFunction::constant(-1.0)),
                    DomainError);
}

TEST_CASE("eval_G closed forms") {
    const cplx w = std::polar(0.6, 1.1);

    // nu = 0 with C = 0: p has zero free term and uniform mu2 contributes 0;
    // G vanishes identically.
    DrivingData rot0 = presets::rotation(0.0, ConstantOmega{1.0});
    CHECK(std::abs(rot0.eval_G(w, 0.5)) <= 1e-13);

    // scaling: p == 1, so G = w log_deriv
    DrivingData sca = presets::scaling();
    const cplx g = sca.eval_G(w, 0.3);
    const cplx want = w * sca.log_deriv(0.3);
    CHECK(std::abs(g - want) <= 1e-12 * std::abs(want));

    // rotation with c = 2: G = 2iw
    DrivingData rot = presets::rotation(2.0);
    CHECK(std::abs(rot.eval_G(w, 0.9) - cplx(0.0, 2.0) * w) <= 1e-12);

    // degenerate radial: G = -w
    DrivingData dr = presets::degenerate_radial();
    CHECK(std::abs(dr.eval_G(cplx(0.3, 0.1), 1.0) + cplx(0.3, 0.1)) <= 1e-12);

    // degenerate eval rejects points outside the punctured disk
    CHECK_THROWS_AS((void)dr.eval_G(cplx(1.2, 0.0), 1.0), DomainError);
    CHECK_THROWS_AS((void)dr.eval_G(cplx(0.0, 0.0), 1.0), DomainError);
}

TEST_CASE("field_free_term matches circle samples of G/w") {
    const int n = 256;
    auto measured = [&](const DrivingData& d, double t) {
        const double r = d.r(t);
        const double rho = std::max((1.0 + r) / 2.0, std::sqrt(std::max(r, 0.09)));
        std::vector<cplx> samples(n);
        for (int j = 0; j < n; ++j) {
            const cplx z = std::polar(rho, two_pi * j / n);
            samples[j] = d.eval_G(z, t) / z;
        }
        return free_term(samples).real();
    };

    CHECK(presets::degenerate_expdecay().field_free_term(0.7) ==
          doctest::Approx(-std::exp(-0.7)).epsilon(1e-12));

    for (double t : {0.1, 0.8, 1.6}) {
        DrivingData sca = presets::scaling();
        CHECK(measured(sca, t) == doctest::Approx(sca.field_free_term(t)).epsilon(1e-8));
        DrivingData spl = presets::split(0.3);
        CHECK(measured(spl, t) == doctest::Approx(spl.field_free_term(t)).epsilon(1e-8));
        DrivingData sed = presets::seeded(5);
        CHECK(measured(sed, t) == doctest::Approx(sed.field_free_term(t)).epsilon(1e-8));
        DrivingData dr = presets::degenerate_radial();
        CHECK(measured(dr, t) == doctest::Approx(-1.0).epsilon(1e-10));
    }
}

TEST_CASE("field magnitude obeys the kernel majorant") {
    DrivingData d = presets::seeded(5);
    for (double t : {0.0, 0.5, 1.3}) {
        const double r = d.r(t);
        const double c = std::abs(d.rotation(t));
        const double ld = std::abs(d.log_deriv(t));
        for (double f : {0.15, 0.5, 0.9}) {
            const double rho = r + f * (1.0 - r);
            for (double th : {0.3, 2.0, 4.4}) {
                const cplx z = std::polar(rho, th);
                const double lhs = std::abs(d.eval_G(z, t) / z);
                const double a = rho, b = r * r / rho;
                const double A =
                    1.0 + 2.0 / (1.0 - r * r) * (a / (1.0 - a) + b / (1.0 - b));
                const double a2 = r / rho, b2 = r * rho;
                const double B =
                    2.0 / (1.0 - r * r) * (a2 / (1.0 - a2) + b2 / (1.0 - b2)) + 1.0;
                CAPTURE(t);
                CAPTURE(z);
                CHECK(lhs <= c + ld * (A + B) + 1e-9);
            }
        }
    }
}

TEST_CASE("G is holomorphic in w: centered stencil kills the conj derivative") {
    // d/d(conj w) via the four-point stencil; vanishes for holomorphic G.
    DrivingData d = presets::seeded(11);
    const double t = 0.4;
    const double h = 1e-5;
    for (cplx w : {std::polar(0.55, 0.7), std::polar(0.8, 3.0)}) {
        const cplx gx = (d.eval_G(w + h, t) - d.eval_G(w - h, t)) / (2.0 * h);
        const cplx gy = (d.eval_G(w + cplx(0.0, h), t) - d.eval_G(w - cplx(0.0, h), t)) /
                        (2.0 * h);
        const cplx dbar = 0.5 * (gx + cplx(0.0, 1.0) * gy);
        const double scale = std::abs(gx) + std::abs(gy) + 1.0;
        CHECK(std::abs(dbar) <= 1e-6 * scale);
    }
}

TEST_CASE("rotation and alpha integrals are exact") {
    DrivingData rot = presets::rotation(2.5);
    CHECK(rot.rotation_integral(0.3, 1.9) == doctest::Approx(2.5 * 1.6).epsilon(1e-14));

    DrivingData de = presets::degenerate_expdecay();
    const double got = de.alpha_integral(0.2, 1.4);
    const double want = std::exp(-0.2) - std::exp(-1.4);
    CHECK(got == doctest::Approx(want).epsilon(1e-13));
    auto tail = de.alpha_tail_integral(1.0);
    REQUIRE(tail.has_value());
    CHECK(*tail == doctest::Approx(std::exp(-1.0)).epsilon(1e-13));
    CHECK(!presets::degenerate_radial().alpha_tail_integral(0.0).has_value());
}

TEST_CASE("breakpoints merge schedule breaks with the degeneration time") {
    DrivingData mr = presets::mixed_rotation(0.0, 1.0, 1.0);
    const auto bp = mr.breakpoints();
    REQUIRE(!bp.empty());
    bool has_degen = false;
    for (double b : bp) has_degen = has_degen || b == 1.0;
    CHECK(has_degen);
    for (std::size_t i = 1; i < bp.size(); ++i) CHECK(bp[i - 1] < bp[i]);

    // nu_tail reads past every break
    CHECK(mr.nu_tail(40.0) == 1.0);     // degenerate regime: mu1 carries all mass
    CHECK(presets::rotation().nu_tail(40.0) == 0.0);
    CHECK(presets::split(0.3).nu_tail(40.0) == doctest::Approx(0.3).epsilon(1e-12));
}

namespace {
// equality up to the ulp-level renormalization applied on construction
void check_close(const CircleMeasure& a, const CircleMeasure& b) {
    CHECK(std::abs(a.uniform_mass() - b.uniform_mass()) <= 1e-14);
    REQUIRE(a.atoms().size() == b.atoms().size());
    for (std::size_t i = 0; i < a.atoms().size(); ++i) {
        CHECK(a.atoms()[i].angle == b.atoms()[i].angle);
        CHECK(std::abs(a.atoms()[i].weight - b.atoms()[i].weight) <= 1e-14);
    }
}
} // namespace

TEST_CASE("reflected driving data") {
    DrivingData d = presets::seeded(21);
    DrivingData ref = d.reflected();
    CHECK(ref.rotation(0.7) == doctest::Approx(-d.rotation(0.7)).epsilon(1e-15));
    const auto& p = d.measures_at(0.3);
    const auto& q = ref.measures_at(0.3);
    check_close(q.mu1, p.mu2.mirrored());
    check_close(q.mu2, p.mu1.mirrored());
    CHECK(ref.r(1.1) == d.r(1.1));

    CHECK(presets::rotation(2.0).reflected().rotation(0.5) == -2.0);

    CHECK_THROWS_AS((void)presets::mixed_rotation().reflected(), DegenerateTimeError);
    CHECK_THROWS_AS((void)presets::degenerate_radial().reflected(), DegenerateTimeError);
}

TEST_CASE("semicompleteness validator") {
    auto rep = validate_driving(presets::mixed_rotation(0.5, 1.0, 1.0));
    CHECK(rep.pass);
    CHECK(!rep.integral_divergent);
    CHECK(rep.items.size() == 6);
    for (const auto& it : rep.items) CHECK(it.pass);

    auto bad = validate_driving(presets::mixed_split(0.5, 1.0, 1.0));
    CHECK(!bad.pass);
    CHECK(bad.integral_divergent);
    CHECK(bad.failure_time > 0.0);
    CHECK(bad.failure_time <= 1.0);

    CHECK(validate_driving(presets::seeded(3)).pass);
    CHECK(validate_driving(presets::scaling()).pass);
    CHECK(validate_driving(presets::degenerate_expdecay()).pass);
}
