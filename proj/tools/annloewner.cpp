// Batch front-end: drives the library from JSON configs and emits JSON/CSV
// artifacts.  Exit codes: 0 success, 1 usage/config error, 2 verification
// failure, 3 solver failure.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "loewner/acceptance.hpp"
#include "loewner/config_io.hpp"

namespace {

using namespace loewner;

constexpr int exit_ok = 0;
constexpr int exit_config = 1;
constexpr int exit_verification = 2;
constexpr int exit_solver = 3;

struct Options {
    std::string config_path;
    std::string out_dir;        // empty: print reports to stdout only
    std::uint64_t seed = 2024;
    double tol = 0.0;           // 0: per-command default
};

double unit_draw(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

void emit_report(const Options& opt, const std::string& name, const json& rep) {
    const std::string text = dump_deterministic(rep);
    std::cout << text;
    if (!opt.out_dir.empty())
        write_text_file((std::filesystem::path(opt.out_dir) / name).string(),
                        text);
}

void emit_csv(const Options& opt, const std::string& name,
              const std::string& content) {
    if (!opt.out_dir.empty())
        write_text_file((std::filesystem::path(opt.out_dir) / name).string(),
                        content);
}

json load_config(const Options& opt) {
    json cfg = opt.config_path.empty() ? json::object()
                                       : load_json_file(opt.config_path);
    if (!cfg.is_object()) throw ConfigError("config root must be an object");
    return cfg;
}

DrivingData driving_from(const json& cfg, const Options& opt) {
    if (!cfg.contains("driving"))
        throw ConfigError("config needs a 'driving' block");
    json block = cfg.at("driving");
    // --seed overrides the seed of the seeded preset
    if (block.is_object() && block.value("preset", "") == "seeded")
        block["seed"] = static_cast<double>(opt.seed);
    return parse_driving(block);
}

SolverConfig solver_from(const json& cfg) {
    return cfg.contains("solver") ? parse_solver(cfg.at("solver"))
                                  : SolverConfig{};
}

// K_r on a modulus x angle grid plus a reconstruction round trip on
// f(z) = 2z + 3 + r^2/z.
int cmd_kernel(const json& cfg, const Options& opt) {
    double r = 0.3;
    std::vector<double> moduli;
    std::size_t angles_n = 64, nodes = 1024;
    if (cfg.contains("kernel")) {
        const json& k = cfg.at("kernel");
        for (const auto& item : k.items()) {
            const std::string& key = item.key();
            if (key != "r" && key != "moduli" && key != "angles_n" &&
                key != "reconstruction_nodes")
                throw ConfigError("kernel: unknown key '" + key + "'");
        }
        r = k.value("r", r);
        if (k.contains("moduli"))
            moduli = k.at("moduli").get<std::vector<double>>();
        angles_n = k.value("angles_n", angles_n);
        nodes = k.value("reconstruction_nodes", nodes);
    }
    if (!(r >= 0.0 && r < 1.0)) throw ConfigError("kernel: r must be in [0, 1)");
    if (moduli.empty())
        for (int i = 1; i <= 4; ++i)
            moduli.push_back(r + i * (1.0 - r) / 5.0);

    std::string csv = "r,modulus,angle,re_K,im_K\n";
    for (double m : moduli)
        for (std::size_t a = 0; a < angles_n; ++a) {
            const double angle = two_pi * static_cast<double>(a) /
                                 static_cast<double>(angles_n);
            const cplx value = villat_eval(r, std::polar(m, angle));
            csv += format_double(r) + "," + format_double(m) + "," +
                   format_double(angle) + "," + format_double(value.real()) +
                   "," + format_double(value.imag()) + "\n";
        }
    emit_csv(opt, "kernel_grid.csv", csv);

    // free term on the widest sampled circle
    std::vector<cplx> samples(512);
    const double rho = std::max(std::sqrt(r), 0.5);
    for (std::size_t j = 0; j < samples.size(); ++j)
        samples[j] =
            villat_eval(r, std::polar(rho, two_pi * static_cast<double>(j) / 512.0));
    const double free_defect = std::abs(free_term(samples) - cplx(1.0));

    double reconstruction_defect = 0.0;
    if (r > 0.0) {
        auto f = [&](cplx z) { return 2.0 * z + 3.0 + (r * r) / z; };
        std::vector<double> outer_re(nodes), inner_re(nodes);
        double im_sum = 0.0;
        for (std::size_t j = 0; j < nodes; ++j) {
            const cplx xi =
                std::polar(1.0, two_pi * static_cast<double>(j) /
                                    static_cast<double>(nodes));
            outer_re[j] = f(xi).real();
            inner_re[j] = f(r * xi).real();
            im_sum += f(xi).imag();
        }
        for (int k = 0; k < 25; ++k) {
            const cplx z = std::polar(r + (0.1 + 0.8 * k / 24.0) * (0.9 - r),
                                      0.41 + 0.53 * k);
            reconstruction_defect = std::max(
                reconstruction_defect,
                std::abs(villat_reconstruct(r, outer_re, inner_re,
                                            im_sum / static_cast<double>(nodes),
                                            z) -
                         f(z)));
        }
    }

    const double tol = opt.tol > 0.0 ? opt.tol : 1e-8;
    const bool pass = free_defect <= 1e-9 && reconstruction_defect <= tol;
    emit_report(opt, "kernel_report.json",
                {{"r", r},
                 {"grid_points", moduli.size() * angles_n},
                 {"free_term_defect", free_defect},
                 {"reconstruction_defect", reconstruction_defect},
                 {"tolerance", tol},
                 {"pass", pass}});
    return pass ? exit_ok : exit_verification;
}

int cmd_evolve(const json& cfg, const Options& opt) {
    const DrivingData data = driving_from(cfg, opt);
    const SolverConfig scfg = solver_from(cfg);
    if (!cfg.contains("evolve"))
        throw ConfigError("config needs an 'evolve' block");
    const json& e = cfg.at("evolve");
    for (const auto& item : e.items()) {
        const std::string& key = item.key();
        if (key != "s" && key != "t" && key != "points")
            throw ConfigError("evolve: unknown key '" + key + "'");
    }
    const double s = e.value("s", 0.0);
    const double t = e.value("t", 1.0);
    if (!e.contains("points") || !e.at("points").is_array())
        throw ConfigError("evolve: 'points' must be an array");

    json summary = json::array();
    bool solver_trouble = false;
    std::size_t index = 0;
    for (const json& p : e.at("points")) {
        for (const auto& item : p.items()) {
            const std::string& key = item.key();
            if (key != "modulus" && key != "angle")
                throw ConfigError("evolve point: unknown key '" + key + "'");
        }
        const cplx z = std::polar(p.at("modulus").get<double>(),
                                  p.value("angle", 0.0));
        const Trajectory traj = evolve_point(data, scfg, s, t, z);
        const char* status = traj.status == TrajStatus::completed ? "completed"
                             : traj.status == TrajStatus::guard_hit
                                 ? "guard_hit"
                                 : "step_failure";
        solver_trouble = solver_trouble || traj.status != TrajStatus::completed;
        emit_csv(opt, "trajectory_" + std::to_string(index) + ".csv",
                 trajectory_csv(traj, data));
        summary.push_back({{"point", index},
                           {"status", status},
                           {"final_time", traj.final_time()},
                           {"re_w", traj.value().real()},
                           {"im_w", traj.value().imag()},
                           {"rho", traj.rho.back()}});
        ++index;
    }
    emit_report(opt, "evolve_report.json",
                {{"s", s}, {"t", t}, {"trajectories", summary}});
    return solver_trouble ? exit_solver : exit_ok;
}

int cmd_classify(const json& cfg, const Options& opt) {
    const DrivingData data = driving_from(cfg, opt);
    const SolverConfig scfg = solver_from(cfg);
    const ClassifyConfig ccfg = cfg.contains("classify")
                                    ? parse_classify(cfg.at("classify"), scfg)
                                    : [&] {
                                          ClassifyConfig c;
                                          c.solver = scfg;
                                          return c;
                                      }();
    const ValidationReport validation = validate_driving(data, ccfg.lambda);
    const TypeReport type = classify_type(data, ccfg);
    emit_report(opt, "classify_report.json",
                {{"validation", validation_to_json(validation)},
                 {"type", type_report_to_json(type)}});
    return type.consistent ? exit_ok : exit_verification;
}

int cmd_validate(const json& cfg, const Options& opt) {
    const DrivingData data = driving_from(cfg, opt);
    const ValidationReport rep = validate_driving(data);
    emit_report(opt, "validate_report.json", validation_to_json(rep));
    return rep.pass ? exit_ok : exit_verification;
}

int cmd_chain(const json& cfg, const Options& opt) {
    const DrivingData data = driving_from(cfg, opt);
    const SolverConfig scfg = solver_from(cfg);
    double horizon = 3.0, compat_tol = 1e-6, pde_h = 1e-3, pde_tol = 1e-3;
    std::size_t tuples = 20;
    if (cfg.contains("chain")) {
        const json& c = cfg.at("chain");
        for (const auto& item : c.items()) {
            const std::string& key = item.key();
            if (key != "horizon" && key != "compat_tol" && key != "pde_h" &&
                key != "pde_tol" && key != "samples")
                throw ConfigError("chain: unknown key '" + key + "'");
        }
        horizon = c.value("horizon", horizon);
        compat_tol = c.value("compat_tol", compat_tol);
        pde_h = c.value("pde_h", pde_h);
        pde_tol = c.value("pde_tol", pde_tol);
        tuples = c.value("samples", tuples);
    }
    if (opt.tol > 0.0) compat_tol = opt.tol;
    const ChainApproximation chain(data, horizon, scfg);

    std::mt19937_64 gen(opt.seed);
    double worst_compat = 0.0;
    std::vector<std::pair<double, cplx>> boundary_samples, grid;
    for (std::size_t k = 0; k < tuples; ++k) {
        const double s = 0.45 * horizon * unit_draw(gen);
        const double t = s + (horizon - s) * (0.2 + 0.6 * unit_draw(gen));
        const double rs = data.r(s);
        const cplx z = std::polar(rs + (0.1 + 0.8 * unit_draw(gen)) * (1.0 - rs),
                                  two_pi * unit_draw(gen));
        worst_compat = std::max(worst_compat, chain_compat_defect(chain, s, t, z));
        boundary_samples.emplace_back(s, z);
        grid.emplace_back(s, z);
    }
    const bool compat_ok = worst_compat <= compat_tol;
    const bool bound_ok = boundary_bound_check(chain, boundary_samples);

    bool out_domain_ok = true;
    for (int i = 0; i < 5; ++i) {
        const double t = 0.15 * horizon * i;
        const double R = std::max(0.3, data.r(t) + 0.25);
        const cplx z = std::polar(R + 0.05 + 0.05 * i, 0.3 + 0.9 * i);
        out_domain_ok = out_domain_ok && out_domain_check(chain, t, R, z, 256);
    }

    const double mid = 0.4 * horizon;
    const double residual =
        pde_residual_check(chain, mid, std::polar(0.5, 0.8), pde_h);
    const bool pde_ok = residual <= pde_tol;

    const RangeEstimate range = loewner_range_estimate(chain, grid);
    const bool pass = compat_ok && bound_ok && out_domain_ok && pde_ok;
    emit_report(opt, "chain_report.json",
                {{"horizon", horizon},
                 {"compat_defect", worst_compat},
                 {"compat_tol", compat_tol},
                 {"boundary_bound_pass", bound_ok},
                 {"out_domain_pass", out_domain_ok},
                 {"pde_residual", residual},
                 {"pde_h", pde_h},
                 {"range",
                  {{"min_modulus", range.min_modulus},
                   {"max_modulus", range.max_modulus},
                   {"label", to_string(range.label)}}},
                 {"pass", pass}});
    return pass ? exit_ok : exit_verification;
}

int cmd_selftest(const Options& opt) {
    const auto results = acceptance::run_all();
    json items = json::array();
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("[%s] criterion %2d: %s - %s\n", r.pass ? "PASS" : "FAIL",
                    r.index, r.name.c_str(), r.detail.c_str());
        all_pass = all_pass && r.pass;
        items.push_back({{"index", r.index},
                         {"name", r.name},
                         {"pass", r.pass},
                         {"detail", r.detail}});
    }
    std::printf("%s\n", all_pass ? "all criteria passed" : "FAILURES present");
    if (!opt.out_dir.empty())
        write_text_file(
            (std::filesystem::path(opt.out_dir) / "selftest_report.json").string(),
            dump_deterministic({{"pass", all_pass}, {"criteria", items}}));
    return all_pass ? exit_ok : exit_verification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Loewner evolution on annuli: kernels, flows, classification"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--config", opt.config_path, "JSON config path");
    app.add_option("--out", opt.out_dir, "output directory for reports/CSV");
    app.add_option("--seed", opt.seed, "seed for sampled checks");
    app.add_option("--tol", opt.tol, "override the command's check tolerance");
    app.fallthrough();

    auto* sub_kernel = app.add_subcommand("kernel", "kernel grid + reconstruction");
    auto* sub_evolve = app.add_subcommand("evolve", "integrate trajectories");
    auto* sub_classify = app.add_subcommand("classify", "conformal type report");
    auto* sub_chain = app.add_subcommand("chain", "chain verification suite");
    auto* sub_validate = app.add_subcommand("validate", "driving-data validation");
    auto* sub_selftest = app.add_subcommand("selftest", "full acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try {
        if (!opt.out_dir.empty())
            std::filesystem::create_directories(opt.out_dir);
        if (sub_selftest->parsed()) return cmd_selftest(opt);
        const loewner::json cfg = load_config(opt);
        if (sub_kernel->parsed()) return cmd_kernel(cfg, opt);
        if (sub_evolve->parsed()) return cmd_evolve(cfg, opt);
        if (sub_classify->parsed()) return cmd_classify(cfg, opt);
        if (sub_chain->parsed()) return cmd_chain(cfg, opt);
        if (sub_validate->parsed()) return cmd_validate(cfg, opt);
        return exit_config;
    } catch (const loewner::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const loewner::SolverError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return exit_solver;
    } catch (const loewner::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_verification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    }
}
