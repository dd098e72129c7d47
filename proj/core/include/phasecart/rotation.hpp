#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace phasecart {

using Vec3 = std::array<double, 3>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
inline double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

/// An element of SU(2) stored as a unit quaternion (w, x, y, z), i.e. the
/// operator exp(-i(theta/2) n.sigma). Sign-significant: q and -q are distinct
/// group elements (a 2pi rotation is -I, not the identity).
struct Rotation {
  double w = 1.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static Rotation identity() { return {}; }

  /// exp(-i(theta/2) n.sigma) with theta = angle_deg in degrees. The axis is
  /// normalized internally; a zero axis is accepted only for angle 0.
  static Rotation from_axis_angle(const Vec3& axis, double angle_deg);

  Rotation inverse() const { return {w, -x, -y, -z}; }

  double norm() const;
  Rotation normalized() const;

  /// The 2x2 complex matrix w*I - i(x*sx + y*sy + z*sz).
  Eigen::Matrix2cd su2_matrix() const;
};

/// Operator product second∘first (first applied first), renormalized.
Rotation compose(const Rotation& second, const Rotation& first);

struct AxisAngle {
  Vec3 axis;
  double angle_deg;  // in [0, 360]
};

/// Inverse of from_axis_angle, canonicalized to angle in [0, 360]; at angle 0
/// or 360 the axis is z-hat by convention.
AxisAngle axis_angle_of(const Rotation& r);

/// One piecewise-constant field region: rotation about `axis` by `angle_deg`.
struct Region {
  Vec3 axis;
  double angle_deg;
};

}  // namespace phasecart
