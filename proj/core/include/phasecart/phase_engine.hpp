#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "phasecart/apparatus.hpp"
#include "phasecart/rotation.hpp"
#include "phasecart/spin_state.hpp"

namespace phasecart {

/// Winding/charge orientation: counterclockwise circulation in the
/// (b1y horizontal, b2y vertical) plane. With the canonical apparatus model
/// the natural circulation already gives charge(0,0) = -1, so the global sign
/// is +1. Echoed in all JSON output as "sign_convention".
inline constexpr int kSignConvention = +1;

/// A polyline in the (B1y, B2y) plane.
struct ParameterPath {
  std::vector<ParameterPoint> vertices;
  int steps_per_segment = 100;
  bool closed = false;

  void validate() const;  // throws ConfigError
};

struct TraceSample {
  double step_index;  // fractional for refined (inserted) samples
  double arclength;
  ParameterPoint point;
  std::complex<double> c;
  double contrast;
  double phase_unwrapped_deg;
  bool refined;
};

struct PhaseTrace {
  std::vector<TraceSample> samples;
  double total_phase_deg = 0.0;  // last minus first sample phase; absolute
  double min_contrast = 1.0;
};

/// Samples c along the path, unwrapping by nearest-branch continuation with
/// recursive bisection (max depth 24) wherever a step's jump reaches 90
/// degrees; low-contrast steps (< 0.05) are refined against a tighter jump
/// threshold. Throws SingularPathError if the path meets a zero of c
/// (contrast < 1e-9).
PhaseTrace trace_path(const ParameterPath& path, const ApparatusConfig& config);

/// round(total unwrapped phase / 360) for a closed path, with the
/// kSignConvention orientation sign applied. Throws ConsistencyError if the
/// total is not an integer multiple of 360 degrees within 1e-6 turns.
int winding_number(const ParameterPath& path, const ApparatusConfig& config);

/// phi_dyn = -sum_i theta_i <psi_i| n_i.J |psi_i> in degrees, where psi_i is
/// the state entering region i.
double dynamical_phase_deg(const std::vector<Region>& regions, const SpinState& input);

/// Unwrapped Pancharatnam phase of <in|psi(s)> at the end of the evolution,
/// minus the dynamical phase. The overlap is traced at >= substeps_per_region
/// interior sample points per region (sampled at midpoints, so an isolated
/// orthogonal passage at a region boundary is crossed by continuation).
/// Throws SingularPathError if a sampled overlap is below 1e-9 or the final
/// overlap vanishes.
double geometric_phase_deg(const std::vector<Region>& regions, const SpinState& input,
                           int substeps_per_region = 200);

/// Total unwrapped overlap phase of the same tracing (before the dynamical
/// subtraction).
double total_evolution_phase_deg(const std::vector<Region>& regions,
                                 const SpinState& input,
                                 int substeps_per_region = 200);

// --- generic adaptive unwrapping over a scalar parameter -------------------

struct UnwrapSample {
  double t;
  std::complex<double> c;
  double phase_deg;
  bool refined;
};

struct UnwrapOptions {
  double jump_threshold_deg = 90.0;
  double low_contrast = 0.05;
  double low_contrast_jump_deg = 22.5;
  int max_depth = 24;
  double zero_contrast = 1e-9;
  bool error_on_zero = true;
};

/// Evaluates f on `steps` equal base intervals of [t0, t1] and unwraps the
/// phase of f by nearest-branch continuation, bisecting steps per `opts`.
std::vector<UnwrapSample> unwrap_along(const std::function<std::complex<double>(double)>& f,
                                       double t0, double t1, int steps,
                                       const UnwrapOptions& opts = {});

}  // namespace phasecart
