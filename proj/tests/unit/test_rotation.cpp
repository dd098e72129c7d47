#include <doctest.h>

#include <cmath>
#include <random>

#include "phasecart/errors.hpp"
#include "phasecart/rotation.hpp"

using namespace phasecart;

namespace {

Rotation random_rotation(std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  Rotation r{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
  return r.normalized();
}

double quat_distance(const Rotation& a, const Rotation& b) {
  return std::max({std::abs(a.w - b.w), std::abs(a.x - b.x), std::abs(a.y - b.y),
                   std::abs(a.z - b.z)});
}

}  // namespace

TEST_CASE("axis-angle construction") {
  const Rotation id = Rotation::from_axis_angle({0, 0, 1}, 0.0);
  CHECK(quat_distance(id, Rotation::identity()) == 0.0);

  // zero axis is fine at angle 0, rejected otherwise
  CHECK_NOTHROW(Rotation::from_axis_angle({0, 0, 0}, 0.0));
  CHECK_THROWS_AS(Rotation::from_axis_angle({0, 0, 0}, 10.0), ConfigError);

  const Rotation ry = Rotation::from_axis_angle({0, 1, 0}, 180.0);
  CHECK(quat_distance(ry, {0, 0, 1, 0}) < 1e-15);

  const double s = 1.0 / std::sqrt(2.0);
  const Rotation ryz = Rotation::from_axis_angle({0, 1, 1}, 180.0);
  CHECK(quat_distance(ryz, {0, 0, s, s}) < 1e-15);
}

TEST_CASE("composition") {
  std::mt19937 rng(7);
  const Rotation r = random_rotation(rng);
  CHECK(quat_distance(compose(Rotation::identity(), r), r) < 1e-15);
  CHECK(quat_distance(compose(r.inverse(), r), Rotation::identity()) < 1e-12);

  // (-i sy)(-i sx) = +i sz, i.e. quaternion (0,0,0,-1)
  const Rotation rx = Rotation::from_axis_angle({1, 0, 0}, 180.0);
  const Rotation ry = Rotation::from_axis_angle({0, 1, 0}, 180.0);
  CHECK(quat_distance(compose(ry, rx), {0, 0, 0, -1}) < 1e-15);
}

TEST_CASE("quaternion composition matches 2x2 matrix product") {
  std::mt19937 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Rotation a = random_rotation(rng);
    const Rotation b = random_rotation(rng);
    const Eigen::Matrix2cd lhs = compose(a, b).su2_matrix();
    const Eigen::Matrix2cd rhs = a.su2_matrix() * b.su2_matrix();
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("axis_angle_of canonicalization") {
  const AxisAngle id = axis_angle_of(Rotation::identity());
  CHECK(id.angle_deg == 0.0);
  CHECK(id.axis[2] == 1.0);

  // -I is a 2pi rotation; axis defaults to z
  const AxisAngle full = axis_angle_of({-1, 0, 0, 0});
  CHECK(full.angle_deg == doctest::Approx(360.0).epsilon(1e-14));
  CHECK(full.axis[2] == 1.0);

  const double s = 1.0 / std::sqrt(2.0);
  const Rotation r = Rotation::from_axis_angle({0, s, s}, 137.0);
  const AxisAngle aa = axis_angle_of(r);
  CHECK(aa.angle_deg == doctest::Approx(137.0).epsilon(1e-10));
  CHECK(std::abs(aa.axis[1] - s) < 1e-10);
  CHECK(std::abs(aa.axis[2] - s) < 1e-10);
  const Rotation back = Rotation::from_axis_angle(aa.axis, aa.angle_deg);
  CHECK(quat_distance(back, r) < 1e-10);
}

TEST_CASE("unit norm is preserved") {
  std::mt19937 rng(3);
  Rotation acc = Rotation::identity();
  for (int i = 0; i < 200; ++i) acc = compose(acc, random_rotation(rng));
  CHECK(std::abs(acc.norm() - 1.0) < 1e-12);
}
