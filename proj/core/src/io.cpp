#include "phasecart/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "phasecart/errors.hpp"

namespace phasecart {

using nlohmann::json;

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string mode_name(ApparatusMode mode) {
  return mode == ApparatusMode::realistic_guide ? "realistic_guide" : "ideal_transverse";
}

ApparatusMode mode_from_name(const std::string& name) {
  if (name == "realistic_guide") return ApparatusMode::realistic_guide;
  if (name == "ideal_transverse") return ApparatusMode::ideal_transverse;
  throw ConfigError("unknown mode: " + name);
}

namespace {

json point_to_json(const ParameterPoint& p) {
  return json{{"b1y", p.b1y}, {"b2y", p.b2y}};
}

ParameterPoint point_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw ConfigError("parameter point needs two coordinates");
    return {j[0].get<double>(), j[1].get<double>()};
  }
  return {j.at("b1y").get<double>(), j.at("b2y").get<double>()};
}

}  // namespace

std::string config_to_json(const ApparatusConfig& config) {
  json j{
      {"guide_field", config.guide_field},
      {"coil_axis", {config.coil_axis[0], config.coil_axis[1], config.coil_axis[2]}},
      {"fixed_point", point_to_json(config.fixed_point)},
      {"input_j", 0.5 * config.input_two_j},
      {"input_m", 0.5 * config.input_two_m},
      {"mode", mode_name(config.mode)},
  };
  return j.dump(2);
}

ApparatusConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config JSON: ") + e.what());
  }
  ApparatusConfig config;
  try {
    if (j.contains("guide_field")) config.guide_field = j["guide_field"].get<double>();
    if (j.contains("coil_axis")) {
      const auto& a = j["coil_axis"];
      if (!a.is_array() || a.size() != 3) throw ConfigError("coil_axis must have 3 components");
      config.coil_axis = {a[0].get<double>(), a[1].get<double>(), a[2].get<double>()};
    }
    if (j.contains("fixed_point")) config.fixed_point = point_from_json(j["fixed_point"]);
    if (j.contains("input_j")) {
      config.input_two_j = static_cast<int>(std::lround(2.0 * j["input_j"].get<double>()));
    }
    if (j.contains("input_m")) {
      config.input_two_m = static_cast<int>(std::lround(2.0 * j["input_m"].get<double>()));
    }
    if (j.contains("mode")) config.mode = mode_from_name(j["mode"].get<std::string>());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config JSON: ") + e.what());
  }
  config.validate();
  return config;
}

ApparatusConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return config_from_json(buf.str());
}

ParameterPath path_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad path JSON: ") + e.what());
  }
  ParameterPath path;
  try {
    for (const auto& v : j.at("vertices")) path.vertices.push_back(point_from_json(v));
    if (j.contains("steps_per_segment")) path.steps_per_segment = j["steps_per_segment"].get<int>();
    if (j.contains("closed")) path.closed = j["closed"].get<bool>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad path JSON: ") + e.what());
  }
  path.validate();
  return path;
}

ParameterPath load_path_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open path file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return path_from_json(buf.str());
}

std::string trace_to_json(const ParameterPath& path, const PhaseTrace& trace) {
  json jpath{{"steps_per_segment", path.steps_per_segment}, {"closed", path.closed}};
  jpath["vertices"] = json::array();
  for (const auto& v : path.vertices) jpath["vertices"].push_back(point_to_json(v));

  json samples = json::array();
  for (const auto& s : trace.samples) {
    samples.push_back(json{
        {"step", s.step_index},
        {"arclength", s.arclength},
        {"b1y", s.point.b1y},
        {"b2y", s.point.b2y},
        {"re_c", s.c.real()},
        {"im_c", s.c.imag()},
        {"contrast", s.contrast},
        {"phase_deg", s.phase_unwrapped_deg},
        {"refined", s.refined},
    });
  }
  json j{
      {"path", jpath},
      {"samples", samples},
      {"total_phase_deg", trace.total_phase_deg},
      {"min_contrast", trace.min_contrast},
      {"sign_convention", kSignConvention},
  };
  return j.dump(2);
}

void write_trace_csv(std::ostream& os, const PhaseTrace& trace) {
  os << "step,arclength,b1y,b2y,re_c,im_c,contrast,phase_deg\n";
  for (const auto& s : trace.samples) {
    os << format_double(s.step_index) << ',' << format_double(s.arclength) << ','
       << format_double(s.point.b1y) << ',' << format_double(s.point.b2y) << ','
       << format_double(s.c.real()) << ',' << format_double(s.c.imag()) << ','
       << format_double(s.contrast) << ',' << format_double(s.phase_unwrapped_deg) << '\n';
  }
}

std::string singularities_to_json(const std::vector<Singularity>& singularities) {
  json j = json::array();
  for (const auto& s : singularities) {
    j.push_back(json{
        {"b1y", s.location.b1y},
        {"b2y", s.location.b2y},
        {"charge", s.charge},
        {"radius", s.localization_radius},
        {"unresolved", s.unresolved},
    });
  }
  return j.dump(2);
}

void write_dbeta_csv(std::ostream& os, const std::vector<DbetaRow>& rows) {
  os << "delta_beta_deg,total_deg,dynamical_deg,geometric_deg,contrast\n";
  for (const auto& r : rows) {
    os << format_double(r.delta_beta_deg) << ',' << format_double(r.total_deg) << ','
       << format_double(r.dynamical_deg) << ',' << format_double(r.geometric_deg) << ','
       << format_double(r.contrast) << '\n';
  }
}

}  // namespace phasecart
