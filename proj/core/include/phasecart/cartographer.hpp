#pragma once

#include <vector>

#include "phasecart/apparatus.hpp"

namespace phasecart {

struct ScanRect {
  double b1_min, b1_max;
  double b2_min, b2_max;
};

/// An isolated zero of c with its topological charge (strength).
struct Singularity {
  ParameterPoint location;
  int charge = 0;
  double localization_radius = 0.0;
  bool unresolved = false;  // candidate that failed to refine to |c| < 1e-9
};

/// Evaluates |c| on a grid_n x grid_n lattice over rect, refines every local
/// minimum below 0.2 by damped Newton on (Re c, Im c) (quadrisection of the
/// cell as fallback), merges duplicates within 1e-6, and assigns each zero a
/// charge by loop winding. Results sorted by (b1y, b2y). Honors the
/// PHASECART_THREADS environment variable for the grid sweep.
std::vector<Singularity> find_singularities(const ScanRect& rect, int grid_n,
                                            const ApparatusConfig& config);

/// Sum of interior charges, cross-checked against the boundary winding
/// number; throws ConsistencyError on mismatch and SingularPathError if the
/// boundary meets a zero.
int charge_sum(const ScanRect& rect, const ApparatusConfig& config);

}  // namespace phasecart
