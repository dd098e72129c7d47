#include "phasecart/spin_state.hpp"

#include <cmath>

#include "phasecart/errors.hpp"

namespace phasecart {

SpinState SpinState::basis_state(int two_j, int two_m) {
  if (two_j < 1 || two_j > kMaxTwoJ) {
    throw ConfigError("spin 2j must be in [1, " + std::to_string(kMaxTwoJ) + "]");
  }
  if (std::abs(two_m) > two_j || (two_j - two_m) % 2 != 0) {
    throw ConfigError("invalid magnetic quantum number for given j");
  }
  SpinState s;
  s.two_j = two_j;
  s.amplitudes = Eigen::VectorXcd::Zero(two_j + 1);
  s.amplitudes((two_j - two_m) / 2) = 1.0;
  return s;
}

Eigen::MatrixXcd spin_operator(int two_j, const Vec3& axis) {
  if (two_j < 1 || two_j > kMaxTwoJ) {
    throw ConfigError("spin 2j must be in [1, " + std::to_string(kMaxTwoJ) + "]");
  }
  const double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (n == 0.0) throw ConfigError("undefined spin operator axis");
  const double nx = axis[0] / n, ny = axis[1] / n, nz = axis[2] / n;

  const int dim = two_j + 1;
  const double j = 0.5 * two_j;
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const double m = j - r;  // row r holds |j, m>
    op(r, r) += nz * m;
    if (r > 0) {
      // J+ |j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1>
      const double cp = std::sqrt(j * (j + 1) - m * (m + 1));
      op(r - 1, r) += std::complex<double>(0.5 * nx * cp, -0.5 * ny * cp);
    }
    if (r + 1 < dim) {
      const double cm = std::sqrt(j * (j + 1) - m * (m - 1));
      op(r + 1, r) += std::complex<double>(0.5 * nx * cm, 0.5 * ny * cm);
    }
  }
  return op;
}

PancharatnamAmplitude pancharatnam_overlap(const SpinState& reference,
                                           const SpinState& target) {
  if (reference.two_j != target.two_j) {
    throw ConfigError("pancharatnam_overlap requires equal spins");
  }
  PancharatnamAmplitude a;
  a.value = reference.amplitudes.dot(target.amplitudes);
  return a;
}

}  // namespace phasecart
