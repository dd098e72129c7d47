#pragma once

#include <complex>

#include <Eigen/Dense>

#include "phasecart/rotation.hpp"

namespace phasecart {

/// Maximum supported 2j. Wigner-d factorial sums are evaluated in double
/// precision; beyond j = 25 round-off is not controlled.
inline constexpr int kMaxTwoJ = 50;

/// A pure spin-j state. Amplitudes are stored in the |j,m> basis with
/// m = j, j-1, ..., -j. Half-integer quantum numbers are carried as doubled
/// integers (two_j = 2j, two_m = 2m).
struct SpinState {
  int two_j = 1;
  Eigen::VectorXcd amplitudes;

  static SpinState basis_state(int two_j, int two_m);

  int dim() const { return two_j + 1; }
  double j() const { return 0.5 * two_j; }
  double norm() const { return amplitudes.norm(); }
};

/// n.J for spin j, n normalized internally (hbar = 1).
Eigen::MatrixXcd spin_operator(int two_j, const Vec3& axis);

/// The fringe amplitude c = <reference|target> with its polar decomposition.
struct PancharatnamAmplitude {
  std::complex<double> value{0.0, 0.0};

  double contrast() const { return std::abs(value); }
  double principal_phase_deg() const { return rad_to_deg(std::arg(value)); }
  /// The phase of c is meaningful only while the contrast is nonzero.
  bool phase_defined() const { return contrast() > 0.0; }
};

PancharatnamAmplitude pancharatnam_overlap(const SpinState& reference,
                                           const SpinState& target);

}  // namespace phasecart
