#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <utility>
#include <vector>

#include "loewner/chain.hpp"
#include "loewner/presets.hpp"
#include "loewner/winding.hpp"

using namespace loewner;

TEST_CASE("chain_eval closed forms and horizon identity") {
    ChainApproximation chain(presets::scaling(), 2.0);
    const cplx z = std::polar(0.55, 1.2);
    const cplx got = chain_eval(chain, 0.5, z);
    const cplx want = z * (chain.data.r(2.0) / chain.data.r(0.5));
    CHECK(std::abs(got - want) <= 1e-12);
    CHECK(chain_eval(chain, 2.0, z) == z); // f_T is the identity
    CHECK(chain.orientation == 1);

    ChainApproximation rot(presets::rotation(1.5), 1.0);
    const cplx got_r = chain_eval(rot, 0.25, z);
    CHECK(std::abs(got_r - std::polar(1.0, 1.5 * 0.75) * z) <= 1e-12);

    CHECK_THROWS_AS((void)chain_eval(chain, -0.1, z), DomainError);
    CHECK_THROWS_AS((void)chain_eval(chain, 2.5, z), DomainError);
    CHECK_THROWS_AS(ChainApproximation(presets::scaling(), 0.0), DomainError);
}

TEST_CASE("compatibility: f_s = f_t o phi_{s,t}") {
    const cplx z = std::polar(0.6, 0.9);
    ChainApproximation sc(presets::scaling(), 2.0);
    CHECK(chain_compat_defect(sc, 0.3, 1.1, z) <= 1e-12);

    ChainApproximation sd(presets::seeded(17), 1.5);
    CHECK(chain_compat_defect(sd, 0.0, 0.7, z) <= 1e-6);
    CHECK(chain_compat_defect(sd, 0.4, 1.5, z) <= 1e-6);
    // degenerate splits are exact
    CHECK(chain_compat_defect(sd, 0.7, 0.7, z) == 0.0);
    CHECK_THROWS_AS((void)chain_compat_defect(sd, 0.8, 0.2, z), DomainError);
}

TEST_CASE("circle images wind once around the puncture") {
    ChainApproximation sd(presets::seeded(29), 1.0);
    const auto image = chain_circle_image(sd, 0.0, 0.5, 128);
    REQUIRE(image.size() == 128);
    CHECK(winding_index(image) == 1);

    ChainApproximation sc(presets::scaling(), 2.0);
    CHECK(winding_index(chain_circle_image(sc, 0.5, 0.4, 64)) == 1);
    CHECK_THROWS_AS((void)chain_circle_image(sc, 0.5, 0.4, 3), SamplingError);
}

TEST_CASE("boundary bound") {
    std::vector<std::pair<double, cplx>> samples;
    for (double t : {0.0, 0.4, 0.9})
        for (double rho : {0.35, 0.6, 0.85})
            for (double th : {0.2, 1.7, 3.9, 5.1})
                samples.push_back({t, std::polar(rho, th)});
    REQUIRE(samples.size() == 36);

    ChainApproximation sd(presets::seeded(23), 1.2);
    CHECK(boundary_bound_check(sd, samples));
    ChainApproximation sc(presets::scaling(), 1.2);
    CHECK(boundary_bound_check(sc, samples));

    ChainApproximation rot(presets::rotation(), 1.2);
    CHECK_THROWS_AS((void)boundary_bound_check(rot, {{0.0, cplx(1.0, 0.0)}}),
                    DomainError);
}

TEST_CASE("image points of larger modulus stay outside smaller circles") {
    const cplx z = std::polar(0.7, 0.8);
    CHECK(out_domain_check(ChainApproximation(presets::scaling(), 1.5), 0.2, 0.4, z));
    CHECK(out_domain_check(ChainApproximation(presets::rotation(), 1.5), 0.2, 0.4, z));
    CHECK(out_domain_check(ChainApproximation(presets::seeded(31), 1.5), 0.2, 0.4, z,
                           256));
    CHECK_THROWS_AS(
        (void)out_domain_check(ChainApproximation(presets::scaling(), 1.5), 0.2,
                               0.75, z),
        DomainError);
}

TEST_CASE("pde residual") {
    // constant omega with no rotation: the chain is the identity, residual 0
    ChainApproximation id(presets::split(0.5, ConstantOmega{1.0}), 1.0);
    CHECK(pde_residual_check(id, 0.5, std::polar(0.6, 1.1), 0.05) == 0.0);

    SUBCASE("stencil validation") {
        ChainApproximation sc(presets::scaling(), 1.0);
        const cplx z = std::polar(0.6, 1.1);
        CHECK_THROWS_AS((void)pde_residual_check(sc, 0.01, z, 0.05), DomainError);
        CHECK_THROWS_AS((void)pde_residual_check(sc, 0.99, z, 0.05), DomainError);
        CHECK_THROWS_AS((void)pde_residual_check(sc, 0.5, std::polar(0.9999, 0.3), 0.05),
                        DomainError);
        // r(0.5) ~ 0.009: the +-2e-4 radial stencil dips below the inner circle
        CHECK_THROWS_AS((void)pde_residual_check(sc, 0.5, cplx(0.009, 0.0), 0.05),
                        DomainError);
    }

    SUBCASE("second-order decay in h") {
        ChainApproximation sc(presets::scaling(), 1.0);
        const cplx z = std::polar(0.55, 0.7);
        const double r1 = pde_residual_check(sc, 0.5, z, 0.02);
        const double r2 = pde_residual_check(sc, 0.5, z, 0.01);
        REQUIRE(r2 > 0.0);
        const double order = std::log2(r1 / r2);
        CHECK(order >= 1.8);
        CHECK(order <= 2.2);
    }
}

TEST_CASE("range estimate") {
    std::vector<std::pair<double, cplx>> grid{{0.2, std::polar(0.5, 1.0)},
                                              {1.0, std::polar(0.7, 2.0)}};

    // identity chain: moduli pass through, both integrals vanish
    ChainApproximation id(presets::split(0.5, ConstantOmega{1.0}), 1.2);
    const auto est_id = loewner_range_estimate(id, grid);
    CHECK(est_id.label == ConformalType::I);
    CHECK(est_id.min_modulus == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(est_id.max_modulus == doctest::Approx(0.7).epsilon(1e-12));

    ChainApproximation rot(presets::rotation(), 1.2);
    const auto est_rot = loewner_range_estimate(rot, grid);
    CHECK(est_rot.label == ConformalType::II);
    CHECK(est_rot.min_modulus == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(est_rot.max_modulus == doctest::Approx(0.7).epsilon(1e-10));

    ChainApproximation ea(presets::exp_approach(), 1.2);
    const auto est_ea = loewner_range_estimate(ea, grid);
    CHECK(est_ea.label == ConformalType::I);
    CHECK(est_ea.min_modulus > ea.data.r(1.2));
    CHECK(est_ea.max_modulus < 1.0);

    CHECK_THROWS_AS((void)loewner_range_estimate(id, {}), SamplingError);
}

TEST_CASE("increments decay first order in the time step") {
    ChainApproximation sd(presets::seeded(37), 1.0);
    const cplx z = std::polar(0.55, 2.4);
    auto increment = [&](double h) {
        return std::abs(chain_eval(sd, 0.5 + h, z) - chain_eval(sd, 0.5, z));
    };
    const double d1 = increment(0.1);
    const double d2 = increment(0.05);
    REQUIRE(d1 > 1e-8);
    CHECK(d2 <= 0.7 * d1);
}
