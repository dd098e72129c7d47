#include "phasecart/apparatus.hpp"

#include <cmath>

#include "phasecart/errors.hpp"
#include "phasecart/wigner.hpp"

namespace phasecart {

void ApparatusConfig::validate() const {
  if (!(guide_field >= 0.0) || !std::isfinite(guide_field)) {
    throw ConfigError("guide_field must be a finite non-negative number");
  }
  const double n = std::sqrt(coil_axis[0] * coil_axis[0] + coil_axis[1] * coil_axis[1] +
                             coil_axis[2] * coil_axis[2]);
  if (std::abs(n - 1.0) > 1e-12) {
    throw ConfigError("coil_axis must be unit length");
  }
  if (std::abs(coil_axis[2]) > 1e-12) {
    throw ConfigError("coil_axis must be orthogonal to z");
  }
  if (!std::isfinite(fixed_point.b1y) || !std::isfinite(fixed_point.b2y)) {
    throw ConfigError("fixed_point must be finite");
  }
  SpinState::basis_state(input_two_j, input_two_m);  // range-checks j, m
}

Rotation coil_unitary(double b, const ApparatusConfig& config) {
  if (config.mode != ApparatusMode::realistic_guide) {
    throw ConfigError("coil_unitary is defined in realistic_guide mode only");
  }
  const Vec3 field{b * config.coil_axis[0], b * config.coil_axis[1],
                   b * config.coil_axis[2] + config.guide_field};
  const double mag =
      std::sqrt(field[0] * field[0] + field[1] * field[1] + field[2] * field[2]);
  if (mag == 0.0) return Rotation::identity();
  return Rotation::from_axis_angle(field, mag);
}

Rotation dual_flipper_unitary(const ParameterPoint& p, const ApparatusConfig& config) {
  return compose(coil_unitary(p.b2y, config), coil_unitary(p.b1y, config));
}

Rotation relative_unitary(const ParameterPoint& p, const ApparatusConfig& config) {
  return compose(dual_flipper_unitary(config.fixed_point, config).inverse(),
                 dual_flipper_unitary(p, config));
}

PancharatnamAmplitude pancharatnam_amplitude(const ParameterPoint& p,
                                             const ApparatusConfig& config) {
  const SpinState in = config.input_state();
  return pancharatnam_overlap(in, apply_rotation(relative_unitary(p, config), in));
}

namespace {

Vec3 transverse_axis(double azimuth_deg) {
  const double a = deg_to_rad(azimuth_deg);
  return {std::cos(a), std::sin(a), 0.0};
}

double flip_angle(double delta_beta_deg, ApparatusMode mode) {
  if (mode == ApparatusMode::ideal_transverse) return 180.0;
  return 180.0 * std::cos(0.5 * deg_to_rad(delta_beta_deg));
}

}  // namespace

Rotation rotated_flipper_unitary(const FlipperOrientation& orientation,
                                 const ApparatusConfig& config) {
  const double db = orientation.delta_beta_deg;
  const double angle = flip_angle(db, config.mode);
  const Rotation first = Rotation::from_axis_angle(transverse_axis(0.0), angle);
  const Rotation second = Rotation::from_axis_angle(transverse_axis(90.0 + db), angle);
  return compose(second, first);
}

std::vector<Region> flipper_relative_regions(const FlipperOrientation& orientation,
                                             ApparatusMode mode) {
  const double db = orientation.delta_beta_deg;
  const double angle = flip_angle(db, mode);
  // Variable flipper, then the fixed flipper undone (last coil first).
  return {
      {transverse_axis(0.0), angle},
      {transverse_axis(90.0 + db), angle},
      {transverse_axis(90.0), -180.0},
      {transverse_axis(0.0), -180.0},
  };
}

}  // namespace phasecart
