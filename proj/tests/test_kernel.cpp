#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "loewner/kernel.hpp"
#include "oracles.hpp"

using namespace loewner;
using oracles::circle_mean;
using oracles::kernel_symmetric_sum;

TEST_CASE("r = 0 gives the Schwarz kernel") {
    CHECK(villat_eval(0.0, cplx(0.5, 0.0)) == cplx(3.0, 0.0));
    for (cplx z : {cplx(0.3, 0.4), cplx(-0.7, 0.1), cplx(0.0, 0.9),
                   cplx(-0.2, -0.6), cplx(0.85, -0.3)}) {
        const cplx want = (1.0 + z) / (1.0 - z);
        CHECK(std::abs(villat_eval(0.0, z) - want) <= 1e-14 * std::abs(want));
    }
}

TEST_CASE("Laurent evaluation matches symmetric partial sums") {
    for (double r : {0.1, 0.2, 0.3, 0.5, 0.6}) {
        for (double rho : {0.9, 0.5, 0.25}) {
            const double m = r + rho * (1.0 - r);
            for (double th : {0.0, 0.4, 1.9, 3.14, 4.6, 6.0}) {
                const cplx z = std::polar(m, th);
                const cplx got = villat_eval(r, z);
                const cplx want = kernel_symmetric_sum(r, z);
                CAPTURE(r);
                CAPTURE(z);
                CHECK(std::abs(got - want) <= 1e-10);
            }
        }
    }
}

TEST_CASE("conjugation symmetry: K(conj z) = conj K(z)") {
    for (double r : {0.0, 0.2, 0.5}) {
        for (double th : {0.3, 1.1, 2.7, 5.5}) {
            const cplx z = std::polar(0.5 + 0.4 * r, th);
            const cplx a = villat_eval(r, std::conj(z));
            const cplx b = std::conj(villat_eval(r, z));
            CHECK(std::abs(a - b) <= 1e-15 * (1.0 + std::abs(b)));
        }
    }
}

TEST_CASE("real-axis size estimates") {
    // On (r,1): K_r(x) >= K_0(x) - correction; each Laurent term is positive
    // for x in (r^2, 1), and the whole sum is bounded by the geometric tail.
    for (double r : {0.1, 0.3, 0.5}) {
        for (double x : {0.55, 0.7, 0.85}) {
            if (x <= r) continue;
            const cplx k = villat_eval(r, cplx(x, 0.0));
            CHECK(std::abs(k.imag()) <= 1e-12);
            CHECK(k.real() >= 1.0 - 1e-12);          // positive series terms
            const double tail = 2.0 / (1.0 - r * r) *
                (x / (1.0 - x) + (r * r / x) / (1.0 - r * r / x));
            CHECK(k.real() - 1.0 <= tail + 1e-12);
        }
        // On (-1,-r) the kernel stays real and below 1.
        for (double x : {0.55, 0.75}) {
            if (x <= r) continue;
            const cplx k = villat_eval(r, cplx(-x, 0.0));
            CHECK(std::abs(k.imag()) <= 1e-12);
            CHECK(k.real() <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("truncation tolerance consistency") {
    const cplx z = std::polar(0.6, 2.1);
    const cplx a = villat_eval(0.3, z, {1e-8, 1'000'000});
    const cplx b = villat_eval(0.3, z, {1e-9, 1'000'000});
    CHECK(std::abs(a - b) <= 1e-8);
}

TEST_CASE("domain and truncation guards") {
    CHECK_THROWS_AS((void)villat_eval(0.3, cplx(0.2, 0.0)), DomainError);
    CHECK_THROWS_AS((void)villat_eval(0.3, cplx(1.1, 0.0)), DomainError);
    CHECK_THROWS_AS((void)villat_eval(0.3, std::polar(0.3, 1.0)), DomainError);
    CHECK_THROWS_AS((void)villat_eval(0.0, cplx(0.0, 0.0)), DomainError);
    // within 1e-6*(1-r) of the outer circle: tail cannot be certified
    const double r = 0.25;
    const double rho = 1.0 - 0.5e-6 * (1.0 - r);
    CHECK_THROWS_AS((void)villat_eval(r, std::polar(rho, 0.7)), TruncationError);
    CHECK_THROWS_AS((void)villat_eval(0.5, std::polar(0.9, 0.3),
                                      KernelTolerance{1e-12, 4}),
                    TruncationError);
}

TEST_CASE("free_term is the equispaced circle mean") {
    const int n = 512;
    const double r = 0.25;
    const double rho = std::sqrt(r);
    std::vector<cplx> samples(n);

    for (int j = 0; j < n; ++j)
        samples[j] = villat_eval(r, std::polar(rho, two_pi * j / n));
    CHECK(std::abs(free_term(samples) - 1.0) <= 1e-10);

    for (int j = 0; j < n; ++j) samples[j] = std::polar(rho, two_pi * j / n);
    CHECK(std::abs(free_term(samples)) <= 1e-12);

    for (int j = 0; j < n; ++j) {
        const cplx z = std::polar(rho, two_pi * j / n);
        samples[j] = 3.0 + 2.0 * z + 5.0 / z;
    }
    CHECK(std::abs(free_term(samples) - 3.0) <= 1e-10);

    std::vector<cplx> three{1.0, 2.0, 3.0};
    CHECK_THROWS_AS((void)free_term(three), SamplingError);
}

TEST_CASE("herglotz_eval: uniform components integrate analytically") {
    const KernelTolerance tol;
    for (double r : {0.0, 0.2, 0.45}) {
        const double rho = std::max(std::sqrt(r), 0.5);
        const cplx z = std::polar(rho, 1.3);
        if (r > 0.0) {
            const cplx p1 =
                herglotz_eval(r, CircleMeasure::uniform(1.0), CircleMeasure::zero(), z, tol);
            CHECK(std::abs(p1 - 1.0) <= 1e-12);
            const cplx p2 =
                herglotz_eval(r, CircleMeasure::zero(), CircleMeasure::uniform(1.0), z, tol);
            CHECK(std::abs(p2) <= 1e-12);
            // oracle: trapezoid average of the kernel over the measure variable
            const cplx m1 = circle_mean(1.0, 2048, [&](cplx xi) {
                return villat_eval(r, z / xi);
            });
            CHECK(std::abs(m1 - 1.0) <= 1e-8);
            const cplx m2 = circle_mean(1.0, 2048, [&](cplx xi) {
                return 1.0 - villat_eval(r, r * xi / z);
            });
            CHECK(std::abs(m2) <= 1e-8);
        } else {
            const cplx p1 =
                herglotz_eval(0.0, CircleMeasure::uniform(1.0), CircleMeasure::zero(), z, tol);
            CHECK(std::abs(p1 - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("herglotz_eval: atoms evaluate the kernel directly") {
    const double r = 0.3;
    const cplx z = std::polar(0.6, 0.9);
    const double a = 2.2;
    const CircleMeasure mu1({{a, 1.0}}, 0.0);
    const cplx got = herglotz_eval(r, mu1, CircleMeasure::zero(), z);
    const cplx want = villat_eval(r, z / std::polar(1.0, a));
    CHECK(std::abs(got - want) <= 1e-13 * (1.0 + std::abs(want)));

    const CircleMeasure mu2({{a, 1.0}}, 0.0);
    const cplx got2 = herglotz_eval(r, CircleMeasure::zero(), mu2, z);
    const cplx want2 = 1.0 - villat_eval(r, r * std::polar(1.0, a) / z);
    CHECK(std::abs(got2 - want2) <= 1e-13 * (1.0 + std::abs(want2)));
}

TEST_CASE("herglotz_eval guards") {
    const cplx z = std::polar(0.6, 0.2);
    CHECK_THROWS_AS((void)herglotz_eval(0.3, CircleMeasure::uniform(0.5),
                                        CircleMeasure::uniform(0.4), z),
                    MassConditionError);
    CHECK_THROWS_AS((void)herglotz_eval(0.0, CircleMeasure::uniform(0.5),
                                        CircleMeasure::uniform(0.5), z),
                    MassConditionError);
    CHECK_THROWS_AS((void)herglotz_eval(0.3, CircleMeasure::uniform(1.0),
                                        CircleMeasure::zero(), cplx(0.1, 0.0)),
                    DomainError);
}

TEST_CASE("herglotz free term equals the mass of mu1") {
    const int n = 512;
    std::vector<cplx> samples(n);
    for (double r : {0.0, 0.15, 0.35, 0.6}) {
        const double rho = std::max(std::sqrt(r), 0.5);
        CircleMeasure mu1({{0.8, 0.25}, {4.0, 0.15}}, r == 0.0 ? 0.6 : 0.3);
        CircleMeasure mu2 = r == 0.0
            ? CircleMeasure::zero()
            : CircleMeasure({{2.5, 0.2}}, 0.1);
        if (r == 0.0) mu1 = CircleMeasure({{0.8, 0.55}, {4.0, 0.45}}, 0.0);
        const double m1 = mu1.total_mass();
        REQUIRE(std::abs(mu1.total_mass() + mu2.total_mass() - 1.0) <= 1e-12);
        for (int j = 0; j < n; ++j)
            samples[j] =
                herglotz_eval(r, mu1, mu2, std::polar(rho, two_pi * j / n));
        CAPTURE(r);
        CHECK(std::abs(free_term(samples) - m1) <= 1e-8);
    }
}

TEST_CASE("villat_reconstruct recovers boundary data") {
    const double r = 0.2;
    const int n = 1024;
    auto sample = [&](auto&& f) {
        std::vector<double> outer(n), inner(n);
        cplx inner_mean = 0.0;
        for (int j = 0; j < n; ++j) {
            const double th = two_pi * j / n;
            outer[j] = f(std::polar(1.0, th)).real();
            const cplx fi = f(std::polar(r, th));
            inner[j] = fi.real();
            inner_mean += fi;
        }
        inner_mean /= static_cast<double>(n);
        return std::tuple{outer, inner, inner_mean.imag()};
    };

    SUBCASE("constants") {
        auto [outer, inner, im] = sample([](cplx) { return cplx(2.5, 0.0); });
        const cplx got = villat_reconstruct(r, outer, inner, im, std::polar(0.55, 1.0));
        CHECK(std::abs(got - 2.5) <= 1e-10);
        auto [o2, i2, im2] = sample([](cplx) { return cplx(0.0, 2.5); });
        const cplx got2 = villat_reconstruct(r, o2, i2, im2, std::polar(0.55, 1.0));
        CHECK(std::abs(got2 - cplx(0.0, 2.5)) <= 1e-10);
    }

    SUBCASE("Laurent polynomials") {
        auto f = [](cplx z) { return 2.0 * z + 3.0 + 0.04 / z; };
        auto [outer, inner, im] = sample(f);
        const cplx z = std::polar(0.5, pi / 4);
        CHECK(std::abs(villat_reconstruct(r, outer, inner, im, z) - f(z)) <= 1e-8);

        auto g = [](cplx z) { return z * z - 0.3 / z + cplx(0.0, 0.2); };
        auto [o2, i2, im2] = sample(g);
        const cplx z2 = std::polar(0.7, 2.9);
        CHECK(std::abs(villat_reconstruct(r, o2, i2, im2, z2) - g(z2)) <= 1e-8);
    }

    SUBCASE("guards") {
        std::vector<double> small(32, 0.0), ok(64, 0.0);
        CHECK_THROWS_AS((void)villat_reconstruct(r, small, ok, 0.0, cplx(0.5, 0.0)),
                        SamplingError);
        CHECK_THROWS_AS((void)villat_reconstruct(r, ok, small, 0.0, cplx(0.5, 0.0)),
                        SamplingError);
        CHECK_THROWS_AS((void)villat_reconstruct(0.0, ok, ok, 0.0, cplx(0.5, 0.0)),
                        DomainError);
    }
}
