#include "phasecart/scenarios.hpp"

#include <cmath>

#include "phasecart/errors.hpp"
#include "phasecart/wigner.hpp"

namespace phasecart {

Figure1Result run_figure1(const ApparatusConfig& config) {
  Figure1Result result;
  result.iaf = run_field_reversal({q_point(179.0, 179.0)}, config);
  result.ibf = run_field_reversal({q_point(181.0, 181.0)}, config);
  result.icf = run_field_reversal({q_point(1.0, 1.0)}, config);
  return result;
}

PhaseTrace run_field_reversal(const std::vector<ParameterPoint>& via,
                              const ApparatusConfig& config, int steps_per_segment) {
  ParameterPath path;
  path.steps_per_segment = steps_per_segment;
  path.vertices.push_back(point_I());
  path.vertices.insert(path.vertices.end(), via.begin(), via.end());
  path.vertices.push_back(point_F());
  return trace_path(path, config);
}

namespace {

std::vector<DbetaRow> scan_flipper(ApparatusMode mode, int two_j, double range_deg,
                                   int steps) {
  if (!(range_deg > 0.0) || range_deg > 180.0) {
    throw ConfigError("delta-beta range must be in (0, 180] degrees");
  }
  if (steps < 1) throw ConfigError("scan needs at least one step per side");

  ApparatusConfig flipper_config;
  flipper_config.mode = mode;
  const SpinState input = SpinState::basis_state(two_j, two_j);
  const Rotation fixed = rotated_flipper_unitary({0.0}, flipper_config);

  const auto c_of = [&](double db) {
    const Rotation rel =
        compose(fixed.inverse(), rotated_flipper_unitary({db}, flipper_config));
    return pancharatnam_overlap(input, apply_rotation(rel, input)).value;
  };
  const auto row_of = [&](const UnwrapSample& s) {
    DbetaRow row;
    row.delta_beta_deg = s.t;
    row.total_deg = s.phase_deg;
    row.dynamical_deg = dynamical_phase_deg(flipper_relative_regions({s.t}, mode), input);
    row.geometric_deg = row.total_deg - row.dynamical_deg;
    row.contrast = std::abs(s.c);
    return row;
  };

  // Unwrap outward from delta_beta = 0, where both flippers coincide and the
  // phase is 0 by construction; this anchors the absolute branch.
  std::vector<DbetaRow> rows;
  const auto negative = unwrap_along(c_of, 0.0, -range_deg, steps);
  for (auto it = negative.rbegin(); it != negative.rend(); ++it) {
    if (!it->refined) rows.push_back(row_of(*it));
  }
  const auto positive = unwrap_along(c_of, 0.0, range_deg, steps);
  for (size_t i = 1; i < positive.size(); ++i) {  // skip the duplicate 0 row
    if (!positive[i].refined) rows.push_back(row_of(positive[i]));
  }
  return rows;
}

}  // namespace

std::vector<DbetaRow> run_dbeta_scan(ApparatusMode mode, int two_j, double range_deg,
                                     int steps) {
  return scan_flipper(mode, two_j, range_deg, steps);
}

std::vector<DbetaRow> run_spin_scan(int n, double range_deg, int steps,
                                    ApparatusMode mode) {
  if (n < 1 || n > kMaxTwoJ) {
    throw ConfigError("spin scan supports n in [1, " + std::to_string(kMaxTwoJ) + "]");
  }
  return scan_flipper(mode, n, range_deg, steps);
}

namespace {

Rotation half_wave_plate(double plate_angle_deg) {
  const double az = deg_to_rad(2.0 * plate_angle_deg);
  return Rotation::from_axis_angle({std::cos(az), std::sin(az), 0.0}, 180.0);
}

Rotation plate_pair(double angle1_deg, double angle2_deg) {
  return compose(half_wave_plate(angle2_deg), half_wave_plate(angle1_deg));
}

double wrap_phase_deg(double d) {
  d = std::fmod(d, 360.0);
  if (d <= -180.0) d += 360.0;
  if (d > 180.0) d -= 360.0;
  return d;
}

}  // namespace

double hwp_pair_phase_deg(double angle1_deg, double angle2_deg) {
  const SpinState circular = SpinState::basis_state(1, 1);
  const Rotation rel =
      compose(plate_pair(0.0, 45.0).inverse(), plate_pair(angle1_deg, angle2_deg));
  const PancharatnamAmplitude c = pancharatnam_overlap(circular, apply_rotation(rel, circular));
  if (!c.phase_defined()) throw SingularPathError("orthogonal plate configurations");
  return c.principal_phase_deg();
}

OpticsResult run_optics_hwp() {
  const SpinState circular = SpinState::basis_state(1, 1);
  OpticsResult result;
  result.c_first =
      pancharatnam_overlap(circular, apply_rotation(plate_pair(0.0, 45.0), circular)).value;
  result.c_second =
      pancharatnam_overlap(circular, apply_rotation(plate_pair(45.0, 0.0), circular)).value;
  result.phase_shift_deg =
      wrap_phase_deg(rad_to_deg(std::arg(result.c_second) - std::arg(result.c_first)));
  return result;
}

}  // namespace phasecart
