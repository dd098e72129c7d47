#include "phasecart/rotation.hpp"

#include <cmath>

#include "phasecart/errors.hpp"

namespace phasecart {

Rotation Rotation::from_axis_angle(const Vec3& axis, double angle_deg) {
  const double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (n == 0.0) {
    if (angle_deg == 0.0) return identity();
    throw ConfigError("undefined rotation axis");
  }
  const double h = 0.5 * deg_to_rad(angle_deg);
  const double s = std::sin(h) / n;
  return {std::cos(h), s * axis[0], s * axis[1], s * axis[2]};
}

double Rotation::norm() const {
  return std::sqrt(w * w + x * x + y * y + z * z);
}

Rotation Rotation::normalized() const {
  const double n = norm();
  return {w / n, x / n, y / n, z / n};
}

Eigen::Matrix2cd Rotation::su2_matrix() const {
  using namespace std::complex_literals;
  Eigen::Matrix2cd m;
  m(0, 0) = std::complex<double>(w, -z);
  m(0, 1) = std::complex<double>(-y, -x);
  m(1, 0) = std::complex<double>(y, -x);
  m(1, 1) = std::complex<double>(w, z);
  return m;
}

Rotation compose(const Rotation& second, const Rotation& first) {
  const Rotation& a = second;
  const Rotation& b = first;
  Rotation r{
      a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
      a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
      a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
      a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
  };
  return r.normalized();
}

AxisAngle axis_angle_of(const Rotation& r) {
  const double vn = std::sqrt(r.x * r.x + r.y * r.y + r.z * r.z);
  const double angle = 2.0 * std::atan2(vn, r.w);  // in [0, 2pi]
  if (vn < 1e-14) {
    return {{0.0, 0.0, 1.0}, rad_to_deg(angle)};
  }
  return {{r.x / vn, r.y / vn, r.z / vn}, rad_to_deg(angle)};
}

}  // namespace phasecart
