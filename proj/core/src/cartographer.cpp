#include "phasecart/cartographer.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <thread>

#include "phasecart/errors.hpp"
#include "phasecart/phase_engine.hpp"

namespace phasecart {
namespace {

constexpr double kSeedThreshold = 0.2;
constexpr double kZeroTol = 1e-9;
constexpr double kMergeRadius = 1e-6;
constexpr int kMaxNewtonIterations = 200;

int thread_count() {
  if (const char* env = std::getenv("PHASECART_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

struct Candidate {
  ParameterPoint location;
  double localization_radius;
  bool resolved;
};

std::complex<double> c_at(const ParameterPoint& p, const ApparatusConfig& config) {
  return pancharatnam_amplitude(p, config).value;
}

/// Damped Newton on (Re c, Im c) with a central-difference Jacobian.
Candidate refine(ParameterPoint p, double cell, const ApparatusConfig& config) {
  const double h = std::max(1e-7, 1e-9 * cell);
  double residual = std::abs(c_at(p, config));
  double last_step = cell;
  for (int it = 0; it < kMaxNewtonIterations && residual >= 1e-13; ++it) {
    const std::complex<double> f = c_at(p, config);
    const std::complex<double> dfx =
        (c_at({p.b1y + h, p.b2y}, config) - c_at({p.b1y - h, p.b2y}, config)) / (2.0 * h);
    const std::complex<double> dfy =
        (c_at({p.b1y, p.b2y + h}, config) - c_at({p.b1y, p.b2y - h}, config)) / (2.0 * h);
    const double det = dfx.real() * dfy.imag() - dfy.real() * dfx.imag();
    double sx, sy;
    if (std::abs(det) > 1e-300) {
      sx = -(f.real() * dfy.imag() - dfy.real() * f.imag()) / det;
      sy = -(dfx.real() * f.imag() - f.real() * dfx.imag()) / det;
    } else {
      // Singular Jacobian: fall back to a quadrisection probe of the cell.
      double best = residual;
      sx = sy = 0.0;
      for (int qx = -1; qx <= 1; ++qx) {
        for (int qy = -1; qy <= 1; ++qy) {
          const double r =
              std::abs(c_at({p.b1y + 0.25 * cell * qx, p.b2y + 0.25 * cell * qy}, config));
          if (r < best) {
            best = r;
            sx = 0.25 * cell * qx;
            sy = 0.25 * cell * qy;
          }
        }
      }
      if (sx == 0.0 && sy == 0.0) break;
    }
    // Damp until the residual decreases.
    double lambda = 1.0;
    ParameterPoint next = p;
    double next_residual = residual;
    for (int d = 0; d < 30; ++d) {
      const ParameterPoint trial{p.b1y + lambda * sx, p.b2y + lambda * sy};
      const double r = std::abs(c_at(trial, config));
      if (r < residual) {
        next = trial;
        next_residual = r;
        break;
      }
      lambda *= 0.5;
    }
    if (next_residual >= residual) break;  // stalled
    last_step = lambda * std::hypot(sx, sy);
    p = next;
    residual = next_residual;
  }
  return {p, std::max(last_step, 1e-9), residual < kZeroTol};
}

int charge_of(const Singularity& s, const ApparatusConfig& config) {
  const double half = std::max(1e-3, 2.0 * s.localization_radius);
  ParameterPath loop;
  loop.closed = true;
  loop.steps_per_segment = 64;
  loop.vertices = {{s.location.b1y - half, s.location.b2y - half},
                   {s.location.b1y + half, s.location.b2y - half},
                   {s.location.b1y + half, s.location.b2y + half},
                   {s.location.b1y - half, s.location.b2y + half}};
  return winding_number(loop, config);
}

}  // namespace

std::vector<Singularity> find_singularities(const ScanRect& rect, int grid_n,
                                            const ApparatusConfig& config) {
  if (grid_n < 16) throw ConfigError("grid_n must be >= 16");
  if (!(rect.b1_max > rect.b1_min) || !(rect.b2_max > rect.b2_min)) {
    throw ConfigError("degenerate scan rectangle");
  }
  config.validate();

  const double dx = (rect.b1_max - rect.b1_min) / (grid_n - 1);
  const double dy = (rect.b2_max - rect.b2_min) / (grid_n - 1);
  std::vector<double> contrast(static_cast<size_t>(grid_n) * grid_n);

  const int nthreads = std::min(thread_count(), grid_n);
  const auto sweep_rows = [&](int row_begin, int row_end) {
    for (int iy = row_begin; iy < row_end; ++iy) {
      for (int ix = 0; ix < grid_n; ++ix) {
        const ParameterPoint p{rect.b1_min + ix * dx, rect.b2_min + iy * dy};
        contrast[static_cast<size_t>(iy) * grid_n + ix] = std::abs(c_at(p, config));
      }
    }
  };
  if (nthreads == 1) {
    sweep_rows(0, grid_n);
  } else {
    std::vector<std::thread> workers;
    for (int t = 0; t < nthreads; ++t) {
      const int lo = grid_n * t / nthreads;
      const int hi = grid_n * (t + 1) / nthreads;
      workers.emplace_back(sweep_rows, lo, hi);
    }
    for (auto& w : workers) w.join();
  }

  const auto at = [&](int ix, int iy) {
    return contrast[static_cast<size_t>(iy) * grid_n + ix];
  };

  std::vector<Singularity> found;
  for (int iy = 0; iy < grid_n; ++iy) {
    for (int ix = 0; ix < grid_n; ++ix) {
      const double v = at(ix, iy);
      if (v >= kSeedThreshold) continue;
      bool is_min = true;
      for (int oy = -1; oy <= 1 && is_min; ++oy) {
        for (int ox = -1; ox <= 1; ++ox) {
          const int jx = ix + ox, jy = iy + oy;
          if (jx < 0 || jy < 0 || jx >= grid_n || jy >= grid_n) continue;
          if ((ox || oy) && at(jx, jy) < v) {
            is_min = false;
            break;
          }
        }
      }
      if (!is_min) continue;

      const ParameterPoint seed{rect.b1_min + ix * dx, rect.b2_min + iy * dy};
      const Candidate cand = refine(seed, std::max(dx, dy), config);
      if (cand.location.b1y < rect.b1_min - dx || cand.location.b1y > rect.b1_max + dx ||
          cand.location.b2y < rect.b2_min - dy || cand.location.b2y > rect.b2_max + dy) {
        continue;  // converged outside the window
      }
      const bool duplicate = std::any_of(found.begin(), found.end(), [&](const Singularity& s) {
        return std::hypot(s.location.b1y - cand.location.b1y,
                          s.location.b2y - cand.location.b2y) < kMergeRadius;
      });
      if (duplicate) continue;

      Singularity s;
      s.location = cand.location;
      s.localization_radius = cand.localization_radius;
      s.unresolved = !cand.resolved;
      if (cand.resolved) s.charge = charge_of(s, config);
      found.push_back(s);
    }
  }

  std::sort(found.begin(), found.end(), [](const Singularity& a, const Singularity& b) {
    if (a.location.b1y != b.location.b1y) return a.location.b1y < b.location.b1y;
    return a.location.b2y < b.location.b2y;
  });
  return found;
}

int charge_sum(const ScanRect& rect, const ApparatusConfig& config) {
  ParameterPath boundary;
  boundary.closed = true;
  boundary.steps_per_segment = 256;
  boundary.vertices = {{rect.b1_min, rect.b2_min},
                       {rect.b1_max, rect.b2_min},
                       {rect.b1_max, rect.b2_max},
                       {rect.b1_min, rect.b2_max}};
  const int boundary_winding = winding_number(boundary, config);

  int interior = 0;
  for (const Singularity& s : find_singularities(rect, 128, config)) {
    if (s.unresolved) throw ConsistencyError("unresolved singularity candidate in rectangle");
    if (s.location.b1y > rect.b1_min && s.location.b1y < rect.b1_max &&
        s.location.b2y > rect.b2_min && s.location.b2y < rect.b2_max) {
      interior += s.charge;
    }
  }
  if (interior != boundary_winding) {
    throw ConsistencyError("boundary winding does not match the sum of interior charges");
  }
  return interior;
}

}  // namespace phasecart
