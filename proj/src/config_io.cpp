#include "loewner/config_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace loewner {

namespace {

void check_keys(const json& j, const char* where,
                std::initializer_list<const char*> allowed) {
    if (!j.is_object())
        throw ConfigError(std::string(where) + ": expected an object");
    for (const auto& item : j.items()) {
        const std::string& key = item.key();
        const bool known = std::any_of(allowed.begin(), allowed.end(),
                                       [&](const char* a) { return key == a; });
        if (!known)
            throw ConfigError(std::string(where) + ": unknown key '" + key + "'");
    }
}

double get_num(const json& j, const char* where, const char* key) {
    if (!j.contains(key))
        throw ConfigError(std::string(where) + ": missing key '" + key + "'");
    if (!j.at(key).is_number())
        throw ConfigError(std::string(where) + ": '" + key + "' must be a number");
    return j.at(key).get<double>();
}

double get_num_or(const json& j, const char* where, const char* key,
                  double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number())
        throw ConfigError(std::string(where) + ": '" + key + "' must be a number");
    return j.at(key).get<double>();
}

std::vector<double> get_num_array(const json& j, const char* where,
                                  const char* key) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw ConfigError(std::string(where) + ": '" + key +
                          "' must be an array of numbers");
    std::vector<double> out;
    for (const auto& v : j.at(key)) {
        if (!v.is_number())
            throw ConfigError(std::string(where) + ": '" + key +
                              "' must contain only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

std::string get_string(const json& j, const char* where, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string())
        throw ConfigError(std::string(where) + ": missing string key '" + key + "'");
    return j.at(key).get<std::string>();
}

DrivingData driving_from_preset(const json& j) {
    const std::string name = get_string(j, "driving", "preset");
    if (name == "scaling") {
        check_keys(j, "driving", {"preset", "system"});
        return j.contains("system") ? presets::scaling(parse_system(j.at("system")))
                                    : presets::scaling();
    }
    if (name == "rotation") {
        check_keys(j, "driving", {"preset", "c", "system"});
        const double c = get_num_or(j, "driving", "c", 1.0);
        return j.contains("system")
                   ? presets::rotation(c, parse_system(j.at("system")))
                   : presets::rotation(c);
    }
    if (name == "split") {
        check_keys(j, "driving", {"preset", "nu", "system"});
        const double nu = get_num_or(j, "driving", "nu", 0.5);
        return j.contains("system")
                   ? presets::split(nu, parse_system(j.at("system")))
                   : presets::split(nu);
    }
    if (name == "exp_approach") {
        check_keys(j, "driving",
                   {"preset", "nu", "omega0", "omega_inf", "lambda"});
        return presets::exp_approach(get_num_or(j, "driving", "nu", 0.5),
                                     get_num_or(j, "driving", "omega0", 1.0),
                                     get_num_or(j, "driving", "omega_inf", 0.5),
                                     get_num_or(j, "driving", "lambda", 1.0));
    }
    if (name == "degenerate_radial") {
        check_keys(j, "driving", {"preset"});
        return presets::degenerate_radial();
    }
    if (name == "degenerate_expdecay") {
        check_keys(j, "driving", {"preset"});
        return presets::degenerate_expdecay();
    }
    if (name == "mixed_rotation") {
        check_keys(j, "driving", {"preset", "c", "omega0", "t_end"});
        return presets::mixed_rotation(get_num_or(j, "driving", "c", 0.0),
                                       get_num_or(j, "driving", "omega0", 1.0),
                                       get_num_or(j, "driving", "t_end", 1.0));
    }
    if (name == "mixed_split") {
        check_keys(j, "driving", {"preset", "nu", "omega0", "t_end"});
        return presets::mixed_split(get_num_or(j, "driving", "nu", 0.5),
                                    get_num_or(j, "driving", "omega0", 1.0),
                                    get_num_or(j, "driving", "t_end", 1.0));
    }
    if (name == "seeded") {
        check_keys(j, "driving", {"preset", "seed", "system"});
        const auto seed = static_cast<std::uint64_t>(
            get_num_or(j, "driving", "seed", 1.0));
        return j.contains("system")
                   ? presets::seeded(seed, parse_system(j.at("system")))
                   : presets::seeded(seed);
    }
    throw ConfigError("driving: unknown preset '" + name + "'");
}

} // namespace

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("invalid JSON in " + path + ": " + e.what());
    }
}

OmegaSpec parse_system(const json& j) {
    const std::string type = get_string(j, "system", "type");
    if (type == "constant") {
        check_keys(j, "system", {"type", "omega0"});
        return ConstantOmega{get_num(j, "system", "omega0")};
    }
    if (type == "affine_to_zero") {
        check_keys(j, "system", {"type", "omega0", "t_end"});
        return AffineToZero{get_num(j, "system", "omega0"),
                            get_num(j, "system", "t_end")};
    }
    if (type == "harmonic_decay") {
        check_keys(j, "system", {"type", "omega0", "lambda"});
        return HarmonicDecay{get_num(j, "system", "omega0"),
                             get_num(j, "system", "lambda")};
    }
    if (type == "exp_approach") {
        check_keys(j, "system", {"type", "omega0", "omega_inf", "lambda"});
        return ExpApproach{get_num(j, "system", "omega0"),
                           get_num(j, "system", "omega_inf"),
                           get_num(j, "system", "lambda")};
    }
    if (type == "identically_zero") {
        check_keys(j, "system", {"type"});
        return IdenticallyZero{};
    }
    if (type == "piecewise_linear") {
        check_keys(j, "system", {"type", "t", "value"});
        return PiecewiseLinearOmega{get_num_array(j, "system", "t"),
                                    get_num_array(j, "system", "value")};
    }
    throw ConfigError("system: unknown type '" + type + "'");
}

TimeFunction parse_time_function(const json& j) {
    if (j.is_number()) return TimeFunction::constant(j.get<double>());
    check_keys(j, "time function", {"constant", "poly", "exp", "pieces"});
    if (j.contains("constant"))
        return TimeFunction::constant(get_num(j, "time function", "constant"));
    if (j.contains("poly"))
        return TimeFunction::polynomial(get_num_array(j, "time function", "poly"));
    if (j.contains("exp")) {
        const json& e = j.at("exp");
        check_keys(e, "time function exp", {"amp", "rate"});
        return TimeFunction::exponential(get_num(e, "time function exp", "amp"),
                                         get_num(e, "time function exp", "rate"));
    }
    if (j.contains("pieces")) {
        if (!j.at("pieces").is_array())
            throw ConfigError("time function: 'pieces' must be an array");
        std::vector<TimeFunction::Piece> pieces;
        for (const json& p : j.at("pieces")) {
            check_keys(p, "time function piece",
                       {"t_start", "exponential", "coeffs"});
            TimeFunction::Piece piece;
            piece.t_start = get_num(p, "piece", "t_start");
            piece.exponential =
                p.contains("exponential") && p.at("exponential").get<bool>();
            piece.coeffs = get_num_array(p, "piece", "coeffs");
            pieces.push_back(std::move(piece));
        }
        return TimeFunction(std::move(pieces));
    }
    throw ConfigError("time function: expected constant, poly, exp, or pieces");
}

CircleMeasure parse_measure(const json& j) {
    check_keys(j, "measure", {"uniform", "atoms"});
    std::vector<CircleMeasure::Atom> atoms;
    if (j.contains("atoms")) {
        if (!j.at("atoms").is_array())
            throw ConfigError("measure: 'atoms' must be an array");
        for (const json& a : j.at("atoms")) {
            check_keys(a, "atom", {"angle", "weight"});
            atoms.push_back({get_num(a, "atom", "angle"),
                             get_num(a, "atom", "weight")});
        }
    }
    return CircleMeasure(std::move(atoms), get_num_or(j, "measure", "uniform", 0.0));
}

MeasureSchedule parse_schedule(const json& j) {
    check_keys(j, "measures", {"times", "pairs"});
    const std::vector<double> times = get_num_array(j, "measures", "times");
    if (!j.contains("pairs") || !j.at("pairs").is_array())
        throw ConfigError("measures: 'pairs' must be an array");
    std::vector<MeasurePair> pairs;
    for (const json& p : j.at("pairs")) {
        check_keys(p, "measure pair", {"mu1", "mu2"});
        MeasurePair pair;
        if (p.contains("mu1")) pair.mu1 = parse_measure(p.at("mu1"));
        if (p.contains("mu2")) pair.mu2 = parse_measure(p.at("mu2"));
        pairs.push_back(std::move(pair));
    }
    return MeasureSchedule(times, std::move(pairs));
}

DrivingData parse_driving(const json& j) {
    if (j.contains("preset")) return driving_from_preset(j);
    check_keys(j, "driving", {"system", "rotation", "measures", "alpha_post"});
    if (!j.contains("system") || !j.contains("measures"))
        throw ConfigError("driving: 'system' and 'measures' are required");
    TimeFunction C = j.contains("rotation") ? parse_time_function(j.at("rotation"))
                                            : TimeFunction::constant(0.0);
    TimeFunction alpha = j.contains("alpha_post")
                             ? parse_time_function(j.at("alpha_post"))
                             : TimeFunction::constant(0.0);
    try {
        return DrivingData(CanonicalSystem(parse_system(j.at("system"))),
                           std::move(C), parse_schedule(j.at("measures")),
                           std::move(alpha));
    } catch (const Error& e) {
        throw ConfigError(std::string("driving: ") + e.what());
    }
}

SolverConfig parse_solver(const json& j) {
    check_keys(j, "solver",
               {"rel_tol", "abs_tol", "max_step", "boundary_guard", "max_steps",
                "kernel_abs_tol"});
    SolverConfig cfg;
    cfg.rel_tol = get_num_or(j, "solver", "rel_tol", cfg.rel_tol);
    cfg.abs_tol = get_num_or(j, "solver", "abs_tol", cfg.abs_tol);
    cfg.max_step = get_num_or(j, "solver", "max_step", cfg.max_step);
    cfg.boundary_guard = get_num_or(j, "solver", "boundary_guard", cfg.boundary_guard);
    cfg.max_steps = static_cast<std::size_t>(
        get_num_or(j, "solver", "max_steps", static_cast<double>(cfg.max_steps)));
    cfg.kernel_tol.abs_tol =
        get_num_or(j, "solver", "kernel_abs_tol", cfg.kernel_tol.abs_tol);
    return cfg;
}

ClassifyConfig parse_classify(const json& j, const SolverConfig& solver) {
    check_keys(j, "classify", {"T_max", "lambda", "T_big", "theta_zero"});
    ClassifyConfig cfg;
    cfg.solver = solver;
    cfg.T_max = get_num_or(j, "classify", "T_max", cfg.T_max);
    cfg.lambda = get_num_or(j, "classify", "lambda", cfg.lambda);
    cfg.T_big = get_num_or(j, "classify", "T_big", cfg.T_big);
    cfg.theta_zero = get_num_or(j, "classify", "theta_zero", cfg.theta_zero);
    return cfg;
}

json system_to_json(const CanonicalSystem& sys) {
    struct Visitor {
        json operator()(const ConstantOmega& s) const {
            return {{"type", "constant"}, {"omega0", s.omega0}};
        }
        json operator()(const AffineToZero& s) const {
            return {{"type", "affine_to_zero"},
                    {"omega0", s.omega0},
                    {"t_end", s.t_end}};
        }
        json operator()(const HarmonicDecay& s) const {
            return {{"type", "harmonic_decay"},
                    {"omega0", s.omega0},
                    {"lambda", s.lambda}};
        }
        json operator()(const ExpApproach& s) const {
            return {{"type", "exp_approach"},
                    {"omega0", s.omega0},
                    {"omega_inf", s.omega_inf},
                    {"lambda", s.lambda}};
        }
        json operator()(const IdenticallyZero&) const {
            return {{"type", "identically_zero"}};
        }
        json operator()(const PiecewiseLinearOmega& s) const {
            return {{"type", "piecewise_linear"}, {"t", s.t}, {"value", s.value}};
        }
    };
    return std::visit(Visitor{}, sys.spec());
}

json time_function_to_json(const TimeFunction& f) {
    json pieces = json::array();
    for (const auto& p : f.pieces())
        pieces.push_back({{"t_start", p.t_start},
                          {"exponential", p.exponential},
                          {"coeffs", p.coeffs}});
    return {{"pieces", pieces}};
}

json measure_to_json(const CircleMeasure& m) {
    json atoms = json::array();
    for (const auto& a : m.atoms())
        atoms.push_back({{"angle", a.angle}, {"weight", a.weight}});
    return {{"uniform", m.uniform_mass()}, {"atoms", atoms}};
}

json driving_to_json(const DrivingData& data) {
    json pairs = json::array();
    for (const auto& p : data.measures().pairs())
        pairs.push_back({{"mu1", measure_to_json(p.mu1)},
                         {"mu2", measure_to_json(p.mu2)}});
    return {{"system", system_to_json(data.system())},
            {"rotation", time_function_to_json(data.C())},
            {"measures", {{"times", data.measures().times()}, {"pairs", pairs}}},
            {"alpha_post", time_function_to_json(data.alpha_post())}};
}

std::string format_double(double x) {
    if (!std::isfinite(x)) return "null"; // JSON has no inf/nan
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

void dump_rec(const json& j, std::string& out, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    switch (j.type()) {
    case json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& item : j.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad_in + json(item.key()).dump() + ": ";
            dump_rec(item.value(), out, indent, depth + 1);
        }
        out += "\n" + pad + "}";
        return;
    }
    case json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        bool first = true;
        for (const auto& v : j) {
            if (!first) out += ",\n";
            first = false;
            out += pad_in;
            dump_rec(v, out, indent, depth + 1);
        }
        out += "\n" + pad + "]";
        return;
    }
    case json::value_t::number_float:
        out += format_double(j.get<double>());
        return;
    default:
        out += j.dump(); // strings, integers, booleans, null
        return;
    }
}

} // namespace

std::string dump_deterministic(const json& j, int indent) {
    std::string out;
    dump_rec(j, out, indent, 0);
    out += "\n";
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + path);
    out << content;
}

std::string trajectory_csv(const Trajectory& traj, const DrivingData& data) {
    std::string out = "t,re_w,im_w,rho,r_of_t\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const double t = traj.times[i];
        out += format_double(t) + "," + format_double(traj.points[i].real()) +
               "," + format_double(traj.points[i].imag()) + "," +
               format_double(traj.rho[i]) + "," + format_double(data.r(t)) + "\n";
    }
    return out;
}

std::string image_csv(const std::vector<double>& t, const std::vector<cplx>& f) {
    if (t.size() != f.size())
        throw SamplingError("image_csv: length mismatch");
    std::string out = "t,re_f,im_f,abs_f\n";
    for (std::size_t i = 0; i < t.size(); ++i)
        out += format_double(t[i]) + "," + format_double(f[i].real()) + "," +
               format_double(f[i].imag()) + "," + format_double(std::abs(f[i])) +
               "\n";
    return out;
}

json validation_to_json(const ValidationReport& rep) {
    json items = json::array();
    for (const auto& item : rep.items)
        items.push_back({{"condition", item.condition},
                         {"pass", item.pass},
                         {"note", item.note}});
    return {{"pass", rep.pass},
            {"integral_divergent", rep.integral_divergent},
            {"integral_value", rep.integral_value},
            {"failure_time", rep.failure_time},
            {"items", items}};
}

json type_report_to_json(const TypeReport& rep) {
    auto outcome = [](const std::optional<IntegralOutcome>& o) -> json {
        if (!o) return nullptr;
        return {{"divergent", o->divergent},
                {"value", o->value},
                {"reached", o->reached}};
    };
    return {{"declared_type", to_string(rep.declared_type)},
            {"consistent", rep.consistent},
            {"probe_forward", to_string(rep.probe_forward)},
            {"probe_reflected",
             rep.probe_reflected ? json(to_string(*rep.probe_reflected)) : json()},
            {"I1", outcome(rep.I1)},
            {"I2", outcome(rep.I2)},
            {"I", outcome(rep.I)}};
}

} // namespace loewner
