#pragma once

#include <string>

#include <json.hpp>

#include "loewner/chain.hpp"
#include "loewner/classify.hpp"
#include "loewner/driving.hpp"
#include "loewner/presets.hpp"
#include "loewner/solver.hpp"

namespace loewner {

using json = nlohmann::json;

// Parse failures and schema violations (including unknown keys) throw
// ConfigError; numerical code never sees a malformed config.

json load_json_file(const std::string& path);

OmegaSpec parse_system(const json& j);
TimeFunction parse_time_function(const json& j);
CircleMeasure parse_measure(const json& j);
MeasureSchedule parse_schedule(const json& j);
// Either {"preset": name, ...preset params} or an explicit
// {"system", "rotation", "measures", "alpha_post"} block.
DrivingData parse_driving(const json& j);
SolverConfig parse_solver(const json& j);
ClassifyConfig parse_classify(const json& j, const SolverConfig& solver);

json system_to_json(const CanonicalSystem& sys);
json time_function_to_json(const TimeFunction& f);
json measure_to_json(const CircleMeasure& m);
json driving_to_json(const DrivingData& data); // direct data only

// Serialization with every number printed via %.17g: byte-identical reports
// for identical inputs.
std::string dump_deterministic(const json& j, int indent = 2);
std::string format_double(double x);

void write_text_file(const std::string& path, const std::string& content);

// CSV columns: t, re_w, im_w, rho, r_of_t
std::string trajectory_csv(const Trajectory& traj, const DrivingData& data);
// CSV columns: t, re_f, im_f, abs_f
std::string image_csv(const std::vector<double>& t, const std::vector<cplx>& f);

json validation_to_json(const ValidationReport& rep);
json type_report_to_json(const TypeReport& rep);

} // namespace loewner
