#include "loewner/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>

#include "loewner/chain.hpp"
#include "loewner/classify.hpp"
#include "loewner/kernel.hpp"
#include "loewner/presets.hpp"
#include "loewner/solver.hpp"
#include "loewner/winding.hpp"

namespace loewner::acceptance {

namespace {

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof buf, f, args);
    va_end(args);
    return buf;
}

double unit_draw(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Independent kernel oracle: symmetric limit of partial sums
// sum_{v=-n}^{n} (1 + r^{2v} z) / (1 - r^{2v} z), accumulated in +-v pairs
// (each pair decays like r^{2v}).
cplx symmetric_partial_sum(double r, cplx z) {
    cplx total = (1.0 + z) / (1.0 - z);
    if (r == 0.0) return total;
    const double r2 = r * r;
    double r2v = 1.0;
    for (int v = 1; v <= 4000; ++v) {
        r2v *= r2;
        const cplx u = r2v * z;
        const cplx pair = (1.0 + u) / (1.0 - u) + (r2v + z) / (r2v - z);
        total += pair;
        if (v > 3 && std::abs(pair) < 1e-14) break;
    }
    return total;
}

CriterionResult kernel_correctness() {
    CriterionResult res{1, "kernel series vs symmetric partial sums", false, ""};
    double worst_eval = 0.0, worst_free = 0.0;
    for (double r : {0.0, 0.1, 0.2, 0.3, 0.5}) {
        for (int k = 0; k < 20; ++k) {
            const double modulus = r + (0.04 + 0.90 * k / 19.0) * (1.0 - r);
            const cplx z = std::polar(modulus, 0.37 + 0.31 * k);
            worst_eval = std::max(worst_eval,
                                  std::abs(villat_eval(r, z) -
                                           symmetric_partial_sum(r, z)));
        }
        const double rho = std::max(std::sqrt(r), 0.5);
        std::vector<cplx> samples(512);
        for (std::size_t j = 0; j < samples.size(); ++j)
            samples[j] = villat_eval(
                r, std::polar(rho, two_pi * static_cast<double>(j) / 512.0));
        worst_free =
            std::max(worst_free, std::abs(free_term(samples) - cplx(1.0)));
    }
    res.pass = worst_eval <= 1e-10 && worst_free <= 1e-9;
    res.detail = fmt("max |K - oracle| = %.3e (tol 1e-10), max |N(K)-1| = %.3e "
                     "(tol 1e-9)",
                     worst_eval, worst_free);
    return res;
}

CriterionResult villat_reconstruction_check() {
    CriterionResult res{2, "boundary-data reconstruction", false, ""};
    const double r = 0.2;
    const std::size_t n = 1024;
    auto f = [](cplx z) { return 2.0 * z + 3.0 + 0.04 / z; };

    std::vector<double> outer_re(n), inner_re(n);
    double im_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const cplx xi = std::polar(1.0, two_pi * static_cast<double>(j) / n);
        outer_re[j] = f(xi).real();
        inner_re[j] = f(r * xi).real();
        im_sum += f(xi).imag();
    }
    const double im_mean = im_sum / static_cast<double>(n);

    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const cplx z =
            std::polar(0.22 + 0.68 * k / 49.0, 2.399963229728653 * k);
        worst = std::max(
            worst, std::abs(villat_reconstruct(r, outer_re, inner_re, im_mean, z) -
                            f(z)));
    }
    res.pass = worst <= 1e-8;
    res.detail = fmt("max |reconstructed - f| = %.3e (tol 1e-8), 1024 nodes, "
                     "50 points",
                     worst);
    return res;
}

CriterionResult closed_form_flows() {
    CriterionResult res{3, "closed-form flows", false, ""};
    const SolverConfig cfg;
    const std::pair<double, double> spans[] = {{0.0, 1.0}, {0.5, 2.0}, {1.0, 4.0}};

    double worst = 0.0;
    const DrivingData scal = presets::scaling();
    const double c = 1.0;
    const DrivingData rot = presets::rotation(c);
    for (const auto& [s, t] : spans) {
        const double rs = scal.r(s), rt = scal.r(t);
        for (int k = 0; k < 20; ++k) {
            const cplx z = std::polar(rs + (0.05 + 0.045 * k) * (1.0 - rs),
                                      0.23 + 0.31 * k);
            worst = std::max(worst, std::abs(evolve_value(scal, cfg, s, t, z) -
                                             z * rt / rs));
            worst = std::max(worst,
                             std::abs(evolve_value(rot, cfg, s, t, z) -
                                      std::polar(1.0, c * (t - s)) * z));
        }
    }
    const DrivingData rad = presets::degenerate_radial();
    for (double t : {1.0, 2.0, 4.0})
        for (int k = 0; k < 20; ++k) {
            const cplx z = std::polar(0.05 + 0.045 * k, 0.23 + 0.31 * k);
            worst = std::max(worst, std::abs(evolve_value(rad, cfg, 0.0, t, z) -
                                             std::exp(-t) * z));
        }
    res.pass = worst <= 1e-8;
    res.detail = fmt("max flow defect = %.3e (tol 1e-8)", worst);
    return res;
}

CriterionResult semigroup_property() {
    CriterionResult res{4, "semigroup defect under tolerance tightening", false, ""};
    const DrivingData family = presets::seeded(7);
    SolverConfig base;
    SolverConfig tight = base;
    tight.rel_tol *= 0.1;
    tight.abs_tol *= 0.1;
    tight.kernel_tol.abs_tol *= 0.1;

    std::mt19937_64 gen(42);
    double worst_base = 0.0, worst_tight = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double s = unit_draw(gen);
        const double u = s + 0.2 + 0.8 * unit_draw(gen);
        const double t = u + 0.2 + 0.8 * unit_draw(gen);
        const double rs = family.r(s);
        const cplx z = std::polar(rs + (0.1 + 0.8 * unit_draw(gen)) * (1.0 - rs),
                                  two_pi * unit_draw(gen));
        worst_base =
            std::max(worst_base, semigroup_defect(family, base, s, u, t, z));
        worst_tight =
            std::max(worst_tight, semigroup_defect(family, tight, s, u, t, z));
    }
    res.pass = worst_base <= 1e-6 && worst_tight * 5.0 <= worst_base;
    res.detail = fmt("max defect %.3e (tol 1e-6), tightened 10x -> %.3e "
                     "(shrink %.1fx, need >= 5x)",
                     worst_base, worst_tight,
                     worst_tight > 0 ? worst_base / worst_tight : 1e99);
    return res;
}

CriterionResult type_matrix() {
    CriterionResult res{5, "type classification matrix", false, ""};
    const ClassifyConfig cfg;
    struct Case {
        const char* name;
        DrivingData data;
        ConformalType expected;
    };
    const Case cases[] = {
        {"exp_approach", presets::exp_approach(), ConformalType::I},
        {"rotation", presets::rotation(), ConformalType::II},
        {"scaling", presets::scaling(), ConformalType::III},
        {"split", presets::split(), ConformalType::IV},
    };
    bool ok = true;
    std::string detail;
    for (const Case& c : cases) {
        const TypeReport rep = classify_type(c.data, cfg);
        bool case_ok = rep.declared_type == c.expected && rep.consistent;
        if (c.expected == ConformalType::IV)
            case_ok = case_ok &&
                      rep.probe_forward == ProbeVerdict::tends_to_zero &&
                      rep.probe_reflected &&
                      *rep.probe_reflected == ProbeVerdict::tends_to_zero;
        ok = ok && case_ok;
        detail += fmt("%s%s -> %s%s", detail.empty() ? "" : ", ", c.name,
                      to_string(rep.declared_type),
                      rep.consistent ? "" : " (probe mismatch)");
    }
    res.pass = ok;
    res.detail = detail;
    return res;
}

CriterionResult degenerate_classification() {
    CriterionResult res{6, "degenerate-regime classification", false, ""};
    const ClassifyConfig cfg;
    const TypeReport rad = classify_type(presets::degenerate_radial(), cfg);
    const TypeReport dec = classify_type(presets::degenerate_expdecay(), cfg);
    res.pass = rad.declared_type == ConformalType::IV && rad.consistent &&
               dec.declared_type == ConformalType::II && dec.consistent;
    res.detail = fmt("alpha=1 -> %s (consistent %d), alpha=e^-t -> %s "
                     "(consistent %d)",
                     to_string(rad.declared_type), rad.consistent ? 1 : 0,
                     to_string(dec.declared_type), dec.consistent ? 1 : 0);
    return res;
}

CriterionResult integral_probe_equivalence() {
    CriterionResult res{7, "radial integral criterion vs trajectory probes",
                        false, ""};
    const ClassifyConfig cfg;
    auto families = presets::classification_suite();
    families.emplace_back("mixed_rotation", presets::mixed_rotation(0.3));
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
        families.emplace_back(fmt("seeded_%llu", (unsigned long long)seed),
                              presets::seeded(seed));

    bool ok = true;
    std::string bad;
    for (const auto& [name, data] : families) {
        const TypeReport rep = classify_type(data, cfg);
        const bool divergent = rep.I1 ? rep.I1->divergent : rep.I->divergent;
        const bool dies = rep.probe_forward == ProbeVerdict::tends_to_zero;
        if (divergent != dies) {
            ok = false;
            bad += fmt("%s%s (integral %s, probe %s)", bad.empty() ? "" : ", ",
                       name.c_str(), divergent ? "divergent" : "finite",
                       to_string(rep.probe_forward));
        }
    }
    res.pass = ok;
    res.detail = ok ? "12 families agree" : "disagreement: " + bad;
    return res;
}

CriterionResult geometric_lemmas() {
    CriterionResult res{8, "boundary bound, out-domain, index preservation",
                        false, ""};
    const SolverConfig scfg;
    auto families = presets::classification_suite();
    families.emplace_back("seeded_11", presets::seeded(11));

    bool ok = true;
    std::string bad;
    for (const auto& [name, data] : families) {
        const ChainApproximation chain(data, 3.0, scfg);

        std::vector<std::pair<double, cplx>> samples;
        std::mt19937_64 gen(99);
        for (int k = 0; k < 100; ++k) {
            const double t = 2.7 * unit_draw(gen);
            const double rt = data.r(t);
            samples.emplace_back(
                t, std::polar(rt + (0.08 + 0.88 * unit_draw(gen)) * (1.0 - rt),
                              two_pi * unit_draw(gen)));
        }
        if (!boundary_bound_check(chain, samples)) {
            ok = false;
            bad += fmt("%s%s: boundary bound", bad.empty() ? "" : ", ",
                       name.c_str());
            continue;
        }

        bool geom_ok = true;
        for (int i = 0; i < 10 && geom_ok; ++i) {
            const double t = 0.28 * i;
            const double R = 0.25 + 0.04 * i;
            std::vector<cplx> image = chain_circle_image(chain, t, R, 256);
            if (winding_index(image) != 1) geom_ok = false;
            for (int j = 0; j < 10 && geom_ok; ++j) {
                const cplx z = std::polar(R + 0.03 + (0.92 - R) * j / 9.0,
                                          0.41 + 0.77 * j);
                const cplx fz = chain_eval(chain, t, z);
                std::vector<cplx> shifted = image;
                for (cplx& w : shifted) w -= fz;
                if (winding_index(shifted) != 0) geom_ok = false;
            }
        }
        if (!geom_ok) {
            ok = false;
            bad += fmt("%s%s: out-domain/index", bad.empty() ? "" : ", ",
                       name.c_str());
        }
    }
    res.pass = ok;
    res.detail = ok ? "100 boundary samples + 100 out-domain configs per family"
                    : "failed: " + bad;
    return res;
}

CriterionResult pde_residual_order() {
    CriterionResult res{9, "pde residual order", false, ""};
    const SolverConfig cfg;
    const double hs[] = {1e-2, 1e-3, 1e-4};
    const cplx z = std::polar(0.5, 0.8);

    auto order_of = [&](const DrivingData& data) {
        const ChainApproximation chain(data, 3.0, cfg);
        double r0 = 0, r2 = 0;
        for (int i = 0; i < 3; ++i) {
            const double r = pde_residual_check(chain, 1.0, z, hs[i]);
            if (i == 0) r0 = r;
            if (i == 2) r2 = r;
        }
        return std::log10(r0 / r2) / 2.0;
    };
    const double order_scaling = order_of(presets::scaling());
    const double order_rotation = order_of(presets::rotation());
    res.pass = order_scaling >= 1.8 && order_rotation >= 1.8;
    res.detail = fmt("empirical order: scaling %.2f, rotation %.2f (need >= 1.8)",
                     order_scaling, order_rotation);
    return res;
}

CriterionResult time_change_invariance() {
    CriterionResult res{10, "time-change invariance", false, ""};
    const SolverConfig cfg;
    const DrivingData mixed = presets::mixed_rotation(0.3);
    const DrivingData mixed_nu = presets::mixed_split(0.5);

    double worst = 0.0;
    {
        const TimeMap tau(LinearTime{2.0});
        const DrivingData remapped = reparametrize(mixed, tau);
        for (const auto& [s, t] : std::initializer_list<std::pair<double, double>>{
                 {0.0, 0.4}, {0.1, 0.45}, {0.2, 0.6}, {0.0, 0.7}})
            for (int k = 0; k < 5; ++k) {
                const cplx z = std::polar(0.15 + 0.16 * k, 0.3 + 0.7 * k);
                worst = std::max(
                    worst, std::abs(evolve_value(remapped, cfg, s, t, z) -
                                    evolve_value(mixed, cfg, 2 * s, 2 * t, z)));
            }
    }
    for (const DrivingData* data : {&mixed, &mixed_nu}) {
        const TimeMap tau(ExpSaturateTime{1.0}); // saturates at the threshold
        const DrivingData remapped = reparametrize(*data, tau);
        for (const auto& [s, t] : std::initializer_list<std::pair<double, double>>{
                 {0.0, 0.5}, {0.2, 1.0}, {0.5, 2.5}})
            for (int k = 0; k < 5; ++k) {
                const cplx z = std::polar(0.3 + 0.12 * k, 0.3 + 0.7 * k);
                worst = std::max(
                    worst,
                    std::abs(evolve_value(remapped, cfg, s, t, z) -
                             evolve_value(*data, cfg, -std::expm1(-s),
                                          -std::expm1(-t), z)));
            }
    }
    res.pass = worst <= 1e-6;
    res.detail = fmt("max |phi*_{s,t} - phi_{tau(s),tau(t)}| = %.3e (tol 1e-6)",
                     worst);
    return res;
}

CriterionResult validator_integrability() {
    CriterionResult res{11, "semicompleteness validator", false, ""};
    const ValidationReport bad = validate_driving(presets::mixed_split(0.5));
    const ValidationReport good = validate_driving(presets::mixed_rotation(0.0));
    res.pass = !bad.pass && bad.integral_divergent && good.pass;
    res.detail = fmt("nu=0.5 rejected (divergent at t=%.4f, partial %.2f), "
                     "nu=0 accepted (%s)",
                     bad.failure_time, bad.integral_value,
                     good.pass ? "pass" : "FAIL");
    return res;
}

} // namespace

std::vector<CriterionResult> run_all() {
    std::vector<CriterionResult> out;
    using Fn = CriterionResult (*)();
    const Fn criteria[] = {
        kernel_correctness,     villat_reconstruction_check,
        closed_form_flows,      semigroup_property,
        type_matrix,            degenerate_classification,
        integral_probe_equivalence, geometric_lemmas,
        pde_residual_order,     time_change_invariance,
        validator_integrability,
    };
    for (Fn fn : criteria) {
        try {
            out.push_back(fn());
        } catch (const std::exception& e) {
            CriterionResult res;
            res.index = static_cast<int>(out.size()) + 1;
            res.name = "criterion aborted";
            res.pass = false;
            res.detail = std::string("exception: ") + e.what();
            out.push_back(std::move(res));
        }
    }
    return out;
}

} // namespace loewner::acceptance
