#pragma once

#include <vector>

#include "phasecart/apparatus.hpp"
#include "phasecart/phase_engine.hpp"

namespace phasecart {

/// Field-reversal traces I -> via -> F through the three canonical via points
/// A = q(179,179), B = q(181,181), C = q(1,1), 100 steps per segment.
struct Figure1Result {
  PhaseTrace iaf, ibf, icf;
};

Figure1Result run_figure1(const ApparatusConfig& config = {});

/// Field reversal I -> via... -> F.
PhaseTrace run_field_reversal(const std::vector<ParameterPoint>& via,
                              const ApparatusConfig& config = {},
                              int steps_per_segment = 100);

struct DbetaRow {
  double delta_beta_deg;
  double total_deg;      // Pancharatnam phase, unwrapped in delta_beta from 0
  double dynamical_deg;
  double geometric_deg;  // total - dynamical
  double contrast;
};

/// Flipper-rotation scan: Pancharatnam phase of the rotated flipper against
/// the fixed one, with its dynamical/geometric split, for delta_beta over
/// [-range, range] (range <= 180). `steps` table rows per half-range side.
std::vector<DbetaRow> run_dbeta_scan(ApparatusMode mode, int two_j, double range_deg,
                                     int steps);

/// The same scan for spin j = n/2 with stretched input |j, j>, ideal mode by
/// default. The unwrapped phase is linear in delta_beta with endpoint
/// magnitudes n*180 degrees at delta_beta = +/-180.
std::vector<DbetaRow> run_spin_scan(int n, double range_deg, int steps,
                                    ApparatusMode mode = ApparatusMode::ideal_transverse);

/// Circular light through two half-wave plates (Poincare-sphere SU(2) model:
/// a plate at azimuth phi is a pi rotation about the equatorial axis at
/// 2*phi). Compares plate angles (0, 45) against (45, 0); the two operators
/// differ by a global sign, so the phase shift is exactly 180 degrees.
struct OpticsResult {
  std::complex<double> c_first;   // plates at (0, 45)
  std::complex<double> c_second;  // plates at (45, 0)
  double phase_shift_deg;
};

OpticsResult run_optics_hwp();

/// Pancharatnam phase (degrees) of plate configuration
/// (angle1_deg, angle2_deg) relative to the (0, 45) baseline.
double hwp_pair_phase_deg(double angle1_deg, double angle2_deg);

}  // namespace phasecart
