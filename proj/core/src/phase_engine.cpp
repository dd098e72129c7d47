#include "phasecart/phase_engine.hpp"

#include <cmath>

#include "phasecart/errors.hpp"
#include "phasecart/wigner.hpp"

namespace phasecart {
namespace {

/// Wraps to (-180, 180].
double wrap_deg(double d) {
  d = std::fmod(d, 360.0);
  if (d <= -180.0) d += 360.0;
  if (d > 180.0) d -= 360.0;
  return d;
}

constexpr double kAmbiguousJumpDeg = 179.0;

struct Unwrapper {
  const std::function<std::complex<double>(double)>& f;
  const UnwrapOptions& opts;
  std::vector<UnwrapSample>& out;

  void check_contrast(const std::complex<double>& c) const {
    if (std::abs(c) < opts.zero_contrast) {
      throw SingularPathError("path passes through a phase singularity; phase undefined");
    }
  }

  bool want_refine(double jump, double min_contrast) const {
    if (opts.error_on_zero) {
      // Parameter-plane tracing: refine on large jumps, and more aggressively
      // where the contrast is low.
      if (jump >= opts.jump_threshold_deg) return true;
      return min_contrast < opts.low_contrast && jump >= opts.low_contrast_jump_deg;
    }
    // State-evolution tracing: an orthogonal passage is a genuine phase
    // discontinuity, so refinement stops once the contrast collapses.
    return jump >= opts.jump_threshold_deg && min_contrast >= opts.low_contrast;
  }

  /// Extends the trace from (t0, c0, phi0) to t1; the sample at t0 is
  /// already emitted.
  void extend(double t0, const std::complex<double>& c0, double phi0, double t1,
              const std::complex<double>& c1, int depth, bool refined) {
    check_contrast(c1);
    const double delta = wrap_deg(rad_to_deg(std::arg(c1)) - phi0);
    const double min_contrast = std::min(std::abs(c0), std::abs(c1));
    if (depth < opts.max_depth && want_refine(std::abs(delta), min_contrast)) {
      const double tm = 0.5 * (t0 + t1);
      const std::complex<double> cm = f(tm);
      extend(t0, c0, phi0, tm, cm, depth + 1, true);
      const UnwrapSample& mid = out.back();
      extend(tm, cm, mid.phase_deg, t1, c1, depth + 1, refined);
      return;
    }
    if (std::abs(delta) >= kAmbiguousJumpDeg) {
      throw SingularPathError("phase branch ambiguous; path too close to a singularity");
    }
    out.push_back({t1, c1, phi0 + delta, refined});
  }
};

}  // namespace

std::vector<UnwrapSample> unwrap_along(const std::function<std::complex<double>(double)>& f,
                                       double t0, double t1, int steps,
                                       const UnwrapOptions& opts) {
  if (steps < 1) throw ConfigError("unwrap_along requires at least one step");
  std::vector<UnwrapSample> out;
  out.reserve(steps + 1);
  Unwrapper u{f, opts, out};
  std::complex<double> c_prev = f(t0);
  u.check_contrast(c_prev);
  out.push_back({t0, c_prev, rad_to_deg(std::arg(c_prev)), false});
  double t_prev = t0;
  for (int k = 1; k <= steps; ++k) {
    const double t = t0 + (t1 - t0) * (static_cast<double>(k) / steps);
    const std::complex<double> c = f(t);
    u.extend(t_prev, c_prev, out.back().phase_deg, t, c, 0, false);
    t_prev = t;
    c_prev = c;
  }
  return out;
}

void ParameterPath::validate() const {
  const size_t min_vertices = closed ? 3 : 2;
  if (vertices.size() < min_vertices) {
    throw ConfigError("path needs at least " + std::to_string(min_vertices) + " vertices");
  }
  if (steps_per_segment < 1) throw ConfigError("steps_per_segment must be positive");
  for (size_t i = 0; i + 1 < vertices.size(); ++i) {
    const double dx = vertices[i + 1].b1y - vertices[i].b1y;
    const double dy = vertices[i + 1].b2y - vertices[i].b2y;
    if (dx == 0.0 && dy == 0.0) throw ConfigError("consecutive path vertices coincide");
    if (!std::isfinite(dx) || !std::isfinite(dy)) throw ConfigError("path vertex not finite");
  }
}

PhaseTrace trace_path(const ParameterPath& path, const ApparatusConfig& config) {
  path.validate();
  config.validate();

  std::vector<ParameterPoint> verts = path.vertices;
  if (path.closed) verts.push_back(verts.front());
  const int nseg = static_cast<int>(verts.size()) - 1;
  const int steps = path.steps_per_segment;

  const auto point_at = [&](double t) -> ParameterPoint {
    int seg = std::min(static_cast<int>(t), nseg - 1);
    const double u = t - seg;
    const ParameterPoint& a = verts[seg];
    const ParameterPoint& b = verts[seg + 1];
    return {a.b1y + (b.b1y - a.b1y) * u, a.b2y + (b.b2y - a.b2y) * u};
  };
  const auto f = [&](double t) { return pancharatnam_amplitude(point_at(t), config).value; };

  const std::vector<UnwrapSample> raw = unwrap_along(f, 0.0, nseg, nseg * steps);

  PhaseTrace trace;
  trace.samples.reserve(raw.size());
  double arclength = 0.0;
  ParameterPoint prev{};
  for (size_t i = 0; i < raw.size(); ++i) {
    const ParameterPoint p = point_at(raw[i].t);
    if (i > 0) arclength += std::hypot(p.b1y - prev.b1y, p.b2y - prev.b2y);
    prev = p;
    const double contrast = std::abs(raw[i].c);
    trace.min_contrast = std::min(trace.min_contrast, contrast);
    trace.samples.push_back({raw[i].t * steps, arclength, p, raw[i].c, contrast,
                             raw[i].phase_deg, raw[i].refined});
  }
  trace.total_phase_deg = trace.samples.back().phase_unwrapped_deg -
                          trace.samples.front().phase_unwrapped_deg;
  return trace;
}

int winding_number(const ParameterPath& path, const ApparatusConfig& config) {
  if (!path.closed) throw ConfigError("winding_number requires a closed path");
  const PhaseTrace trace = trace_path(path, config);
  const double turns = trace.total_phase_deg / 360.0;
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 1e-6) {
    throw ConsistencyError("closed-loop phase is not an integer number of turns");
  }
  return kSignConvention * static_cast<int>(rounded);
}

double dynamical_phase_deg(const std::vector<Region>& regions, const SpinState& input) {
  SpinState psi = input;
  double phase = 0.0;
  for (const Region& region : regions) {
    const Eigen::MatrixXcd op = spin_operator(psi.two_j, region.axis);
    const double expectation = std::real(psi.amplitudes.dot(op * psi.amplitudes));
    phase -= region.angle_deg * expectation;
    psi = apply_rotation(Rotation::from_axis_angle(region.axis, region.angle_deg), psi);
  }
  return phase;
}

namespace {

double traced_total_phase(const std::vector<Region>& regions, const SpinState& input,
                          int substeps_per_region) {
  if (regions.empty()) return 0.0;
  if (substeps_per_region < 100) {
    throw ConfigError("state tracing requires >= 100 sub-steps per region");
  }
  const int n = static_cast<int>(regions.size());

  std::vector<Rotation> prefix(n + 1, Rotation::identity());
  for (int i = 0; i < n; ++i) {
    prefix[i + 1] = compose(
        Rotation::from_axis_angle(regions[i].axis, regions[i].angle_deg), prefix[i]);
  }

  const auto overlap = [&](double s) -> std::complex<double> {
    const int i = std::min(static_cast<int>(s), n - 1);
    const double u = s - i;
    const Rotation r = compose(
        Rotation::from_axis_angle(regions[i].axis, u * regions[i].angle_deg), prefix[i]);
    return pancharatnam_overlap(input, apply_rotation(r, input)).value;
  };

  UnwrapOptions opts;
  opts.error_on_zero = false;
  // Step count coprime to the region count, so interior region boundaries
  // (where the overlap can vanish exactly) fall between base samples.
  const int steps = n * substeps_per_region + 1;
  const std::vector<UnwrapSample> samples = unwrap_along(overlap, 0.0, n, steps, opts);
  return samples.back().phase_deg - samples.front().phase_deg;
}

}  // namespace

double total_evolution_phase_deg(const std::vector<Region>& regions, const SpinState& input,
                                 int substeps_per_region) {
  return traced_total_phase(regions, input, substeps_per_region);
}

double geometric_phase_deg(const std::vector<Region>& regions, const SpinState& input,
                           int substeps_per_region) {
  return traced_total_phase(regions, input, substeps_per_region) -
         dynamical_phase_deg(regions, input);
}

}  // namespace phasecart
