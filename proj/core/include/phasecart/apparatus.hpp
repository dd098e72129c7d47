#pragma once

#include <cmath>
#include <vector>

#include "phasecart/rotation.hpp"
#include "phasecart/spin_state.hpp"

namespace phasecart {

/// Lattice scale factor: q(a, b) denotes the point (a, b)/sqrt(2).
inline const double kQ = 1.0 / std::sqrt(2.0);

/// Coil field settings in precession-angle degrees.
struct ParameterPoint {
  double b1y = 0.0;
  double b2y = 0.0;
};

inline ParameterPoint q_point(double a, double b) { return {a * kQ, b * kQ}; }

/// Guide field magnitude such that a single coil at +/-g produces an exact
/// pi flip: g = 180/sqrt(2).
inline double default_guide_field() { return 180.0 * kQ; }

/// Field-reversal endpoints: I = q(-180, 180), F = q(180, -180).
inline ParameterPoint point_I() { return q_point(-180.0, 180.0); }
inline ParameterPoint point_F() { return q_point(180.0, -180.0); }

enum class ApparatusMode { realistic_guide, ideal_transverse };

struct ApparatusConfig {
  double guide_field = default_guide_field();  // along z, inside both coils
  Vec3 coil_axis{0.0, 1.0, 0.0};               // unit, orthogonal to z
  ParameterPoint fixed_point = point_I();      // the frozen arm's setting
  int input_two_j = 1;
  int input_two_m = 1;
  ApparatusMode mode = ApparatusMode::realistic_guide;

  SpinState input_state() const { return SpinState::basis_state(input_two_j, input_two_m); }
  void validate() const;  // throws ConfigError
};

/// One coil region: rotation about the total field b*coil_axis + g*z by the
/// field magnitude in degrees. Identity when the field vanishes.
Rotation coil_unitary(double b, const ApparatusConfig& config);

/// Coil 1 then coil 2.
Rotation dual_flipper_unitary(const ParameterPoint& p, const ApparatusConfig& config);

/// U(fixed_point)^-1 U(p): variable arm compared against the frozen arm.
Rotation relative_unitary(const ParameterPoint& p, const ApparatusConfig& config);

/// c(p) = <in| D^j(relative_unitary(p)) |in>.
PancharatnamAmplitude pancharatnam_amplitude(const ParameterPoint& p,
                                             const ApparatusConfig& config);

/// Physical rotation delta_beta of one dual flipper relative to the other.
struct FlipperOrientation {
  double delta_beta_deg = 0.0;
};

/// The rotated dual flipper as two flips about transverse axes at azimuths 0
/// and 90 + delta_beta. In ideal_transverse mode both flips are exact pi
/// rotations (pure z-precession overall); in realistic_guide mode each flip
/// angle is 180*cos(delta_beta/2), so the flip is incomplete for
/// delta_beta != 0.
Rotation rotated_flipper_unitary(const FlipperOrientation& orientation,
                                 const ApparatusConfig& config);

/// The region list of the variable flipper followed by the inverse of the
/// fixed (delta_beta = 0) flipper: the piecewise-constant evolution whose net
/// rotation is the flipper-pair relative unitary.
std::vector<Region> flipper_relative_regions(const FlipperOrientation& orientation,
                                             ApparatusMode mode);

}  // namespace phasecart
