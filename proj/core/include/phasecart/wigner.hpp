#pragma once

#include <Eigen/Dense>

#include "phasecart/rotation.hpp"
#include "phasecart/spin_state.hpp"

namespace phasecart {

/// The (2j+1)x(2j+1) unitary representation matrix D^j(r) in the |j,m> basis
/// (m = j..-j), computed from the ZYZ Euler decomposition of r and the
/// factorial little-d sum. Faithful on SU(2): D^j(-r) = -D^j(r) for
/// half-integer j. two_j must be in [1, kMaxTwoJ].
Eigen::MatrixXcd wigner_d_matrix(int two_j, const Rotation& r);

/// D^j(r) applied to s.
SpinState apply_rotation(const Rotation& r, const SpinState& s);

}  // namespace phasecart
