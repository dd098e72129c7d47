#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "phasecart/apparatus.hpp"
#include "phasecart/cartographer.hpp"
#include "phasecart/phase_engine.hpp"
#include "phasecart/scenarios.hpp"

namespace phasecart {

/// Locale-independent float formatting, 12 significant digits.
std::string format_double(double v);

std::string mode_name(ApparatusMode mode);
ApparatusMode mode_from_name(const std::string& name);

// ApparatusConfig <-> JSON object with keys exactly: "guide_field",
// "coil_axis", "fixed_point", "input_j", "input_m", "mode".
std::string config_to_json(const ApparatusConfig& config);
ApparatusConfig config_from_json(const std::string& text);
ApparatusConfig load_config_file(const std::string& path);

// ParameterPath from JSON: {"vertices": [[b1y, b2y], ...],
// "steps_per_segment": int, "closed": bool}.
ParameterPath path_from_json(const std::string& text);
ParameterPath load_path_file(const std::string& path);

/// Trace JSON with keys: "path", "samples", "total_phase_deg",
/// "min_contrast", "sign_convention".
std::string trace_to_json(const ParameterPath& path, const PhaseTrace& trace);

/// CSV with header: step,arclength,b1y,b2y,re_c,im_c,contrast,phase_deg.
void write_trace_csv(std::ostream& os, const PhaseTrace& trace);

/// JSON list: [{"b1y":..., "b2y":..., "charge":..., "radius":...,
/// "unresolved":...}, ...].
std::string singularities_to_json(const std::vector<Singularity>& singularities);

void write_dbeta_csv(std::ostream& os, const std::vector<DbetaRow>& rows);

}  // namespace phasecart
