#include <doctest.h>

#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "phasecart/errors.hpp"
#include "phasecart/spin_state.hpp"
#include "phasecart/wigner.hpp"

using namespace phasecart;

namespace {

Rotation random_rotation(std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  Rotation r{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
  return r.normalized();
}

/// Independent oracle: D^j(r) = exp(-i theta n.J) via Eigen's matrix
/// exponential, bypassing the Euler/little-d route entirely.
Eigen::MatrixXcd exponential_oracle(int two_j, const Rotation& r) {
  AxisAngle aa = axis_angle_of(r);
  const Eigen::MatrixXcd gen = spin_operator(two_j, aa.axis);
  const std::complex<double> factor(0.0, -deg_to_rad(aa.angle_deg));
  return (factor * gen).exp();
}

}  // namespace

TEST_CASE("identity and range checks") {
  for (int two_j : {1, 2, 3, 10}) {
    const Eigen::MatrixXcd d = wigner_d_matrix(two_j, Rotation::identity());
    CHECK((d - Eigen::MatrixXcd::Identity(two_j + 1, two_j + 1)).cwiseAbs().maxCoeff() <
          1e-14);
  }
  CHECK_THROWS_AS(wigner_d_matrix(0, Rotation::identity()), ConfigError);
  CHECK_THROWS_AS(wigner_d_matrix(51, Rotation::identity()), ConfigError);
}

TEST_CASE("j=1/2 is the fundamental representation") {
  std::mt19937 rng(23);
  for (int i = 0; i < 100; ++i) {
    const Rotation r = random_rotation(rng);
    CHECK((wigner_d_matrix(1, r) - r.su2_matrix()).cwiseAbs().maxCoeff() < 1e-12);
  }
  // sign-faithful: D(-r) = -D(r) on half-integer j
  const Rotation r = random_rotation(rng);
  const Rotation neg{-r.w, -r.x, -r.y, -r.z};
  CHECK((wigner_d_matrix(1, neg) + wigner_d_matrix(1, r)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("j=1 z-rotation is diagonal") {
  const double phi = 73.0;
  const Eigen::MatrixXcd d = wigner_d_matrix(2, Rotation::from_axis_angle({0, 0, 1}, phi));
  const std::complex<double> e = std::exp(std::complex<double>(0.0, -deg_to_rad(phi)));
  CHECK(std::abs(d(0, 0) - e) < 1e-14);
  CHECK(std::abs(d(1, 1) - 1.0) < 1e-14);
  CHECK(std::abs(d(2, 2) - std::conj(e)) < 1e-14);
  CHECK(std::abs(d(0, 1)) < 1e-14);
  CHECK(std::abs(d(1, 2)) < 1e-14);
}

TEST_CASE("matches the matrix-exponential oracle") {
  std::mt19937 rng(5);
  for (int two_j : {1, 2, 3, 5, 8}) {
    for (int i = 0; i < 10; ++i) {
      const Rotation r = random_rotation(rng);
      Eigen::MatrixXcd d = wigner_d_matrix(two_j, r);
      Eigen::MatrixXcd oracle = exponential_oracle(two_j, r);
      // The exponential oracle lives on SO(3) input (axis-angle), so it can
      // differ by the central sign on half-integer j; the fundamental rep
      // fixes the sign.
      if (two_j % 2 == 1) {
        const Eigen::Matrix2cd u = r.su2_matrix();
        const Eigen::MatrixXcd o1 = exponential_oracle(1, r);
        if ((o1 + u).cwiseAbs().maxCoeff() < (o1 - u).cwiseAbs().maxCoeff()) oracle = -oracle;
      }
      CHECK((d - oracle).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("homomorphism and unitarity") {
  std::mt19937 rng(41);
  for (int two_j = 1; two_j <= 10; ++two_j) {
    const Rotation r1 = random_rotation(rng);
    const Rotation r2 = random_rotation(rng);
    const Eigen::MatrixXcd lhs = wigner_d_matrix(two_j, compose(r2, r1));
    const Eigen::MatrixXcd rhs = wigner_d_matrix(two_j, r2) * wigner_d_matrix(two_j, r1);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);

    const Eigen::MatrixXcd d = wigner_d_matrix(two_j, r1);
    const Eigen::MatrixXcd gram = d * d.adjoint();
    CHECK((gram - Eigen::MatrixXcd::Identity(two_j + 1, two_j + 1)).cwiseAbs().maxCoeff() <
          1e-10);
  }
}
