#include <doctest.h>

#include <cmath>

#include "phasecart/errors.hpp"
#include "phasecart/scenarios.hpp"
#include "phasecart/wigner.hpp"

using namespace phasecart;

namespace {

double principal_deg(double d) {
  d = std::fmod(d, 360.0);
  if (d <= -180.0) d += 360.0;
  if (d > 180.0) d -= 360.0;
  return d;
}

}  // namespace

TEST_CASE("figure1 traces") {
  const Figure1Result fig = run_figure1();

  for (const PhaseTrace* t : {&fig.iaf, &fig.ibf, &fig.icf}) {
    // endpoint principal phase is pi mod 2pi, total an odd multiple of 180
    CHECK(std::abs(std::abs(principal_deg(t->samples.back().phase_unwrapped_deg)) - 180.0) <
          1e-6);
    const double k = t->total_phase_deg / 180.0;
    CHECK(std::abs(k - std::round(k)) < 1e-8);
    CHECK(std::llabs(std::llround(k)) % 2 == 1);
  }
  CHECK(std::abs(std::abs(fig.iaf.total_phase_deg - fig.ibf.total_phase_deg) - 360.0) < 1e-6);
}

TEST_CASE("figure1 nonlinearity near the singularity") {
  const Figure1Result fig = run_figure1();
  const PhaseTrace& icf = fig.icf;

  // arclength of the corner C = q(1,1)
  double corner_arc = 0.0;
  for (const auto& s : icf.samples) {
    if (std::abs(s.point.b1y - kQ) < 1e-9 && std::abs(s.point.b2y - kQ) < 1e-9) {
      corner_arc = s.arclength;
      break;
    }
  }
  REQUIRE(corner_arc > 0.0);

  double total_var = 0.0, near_var = 0.0;
  for (size_t i = 1; i < icf.samples.size(); ++i) {
    const double dv =
        std::abs(icf.samples[i].phase_unwrapped_deg - icf.samples[i - 1].phase_unwrapped_deg);
    total_var += dv;
    const double mid = 0.5 * (icf.samples[i].arclength + icf.samples[i - 1].arclength);
    if (std::abs(mid - corner_arc) <= 20.0) near_var += dv;
  }
  CHECK(near_var >= 0.7 * total_var);
}

TEST_CASE("field reversal variants") {
  const PhaseTrace via_a = run_field_reversal({q_point(179, 179)});
  const PhaseTrace via_b = run_field_reversal({q_point(181, 181)});
  CHECK(std::abs(std::abs(via_a.total_phase_deg) - 180.0) < 1e-6);
  CHECK(std::abs(std::abs(via_b.total_phase_deg) - 180.0) < 1e-6);
  CHECK(std::abs(via_a.total_phase_deg - via_b.total_phase_deg) ==
        doctest::Approx(360.0).epsilon(1e-8));

  // a detour looping once around q(180,180) picks up an extra 360
  const double g = default_guide_field();
  const PhaseTrace looped = run_field_reversal({q_point(179, 179),
                                                {g, g - 15},
                                                {g + 15, g},
                                                {g, g + 15},
                                                {g - 15, g},
                                                {g, g - 15},
                                                q_point(179, 179)});
  CHECK(std::abs(std::abs(looped.total_phase_deg) - 540.0) < 1e-6);
}

TEST_CASE("dbeta scan, ideal mode") {
  const auto rows = run_dbeta_scan(ApparatusMode::ideal_transverse, 1, 40.0, 40);
  for (const auto& r : rows) {
    CHECK(std::abs(std::abs(r.total_deg) - std::abs(r.delta_beta_deg)) < 1e-9);
    CHECK(std::abs(r.dynamical_deg) < 1e-9);
    CHECK(r.geometric_deg == doctest::Approx(r.total_deg).epsilon(1e-12));
    CHECK(r.contrast == doctest::Approx(1.0).epsilon(1e-12));
  }
  // linear: slope between consecutive rows is constant
  const double slope0 = rows[1].total_deg - rows[0].total_deg;
  for (size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].total_deg - rows[i - 1].total_deg == doctest::Approx(slope0).epsilon(1e-9));
  }
}

TEST_CASE("dbeta scan, realistic mode") {
  const auto rows = run_dbeta_scan(ApparatusMode::realistic_guide, 1, 40.0, 40);
  const auto& at40 = rows.back();
  REQUIRE(at40.delta_beta_deg == doctest::Approx(40.0));
  CHECK(std::abs(at40.dynamical_deg) > 1.0);
  CHECK(std::abs(std::abs(at40.total_deg) - 40.0) > 0.1);

  // both vanish continuously toward delta_beta = 0
  const auto fine = run_dbeta_scan(ApparatusMode::realistic_guide, 1, 1.0, 10);
  const auto& at1 = fine.back();
  CHECK(std::abs(at1.dynamical_deg) < 0.1);
  CHECK(std::abs(std::abs(at1.total_deg) - 1.0) < 0.1);

  SUBCASE("delta_beta = 0 row is exactly zero") {
    for (const auto& r : rows) {
      if (r.delta_beta_deg == 0.0) {
        CHECK(std::abs(r.total_deg) < 1e-12);
        CHECK(std::abs(r.dynamical_deg) < 1e-12);
      }
    }
  }
}

TEST_CASE("spin scan endpoints") {
  for (int n : {1, 2, 5}) {
    const auto rows = run_spin_scan(n, 180.0, 90);
    const auto& lo = rows.front();
    const auto& hi = rows.back();
    REQUIRE(lo.delta_beta_deg == doctest::Approx(-180.0));
    REQUIRE(hi.delta_beta_deg == doctest::Approx(180.0));
    CHECK(std::abs(std::abs(hi.total_deg) - n * 180.0) < 1e-9);
    CHECK(lo.total_deg == doctest::Approx(-hi.total_deg).epsilon(1e-9));
  }

  SUBCASE("slope ratio n=5 vs n=1 is exactly 5") {
    const auto n1 = run_spin_scan(1, 180.0, 90);
    const auto n5 = run_spin_scan(5, 180.0, 90);
    CHECK(n5.back().total_deg == doctest::Approx(5.0 * n1.back().total_deg).epsilon(1e-9));
  }
  SUBCASE("range checks") {
    CHECK_THROWS_AS(run_spin_scan(0, 180.0, 90), ConfigError);
    CHECK_THROWS_AS(run_spin_scan(51, 180.0, 90), ConfigError);
    CHECK_THROWS_AS(run_dbeta_scan(ApparatusMode::ideal_transverse, 1, 181.0, 10),
                    ConfigError);
  }
}

TEST_CASE("optics half-wave plates") {
  const OpticsResult r = run_optics_hwp();
  CHECK(std::abs(std::abs(r.phase_shift_deg) - 180.0) < 1e-12);
  CHECK(std::abs(r.c_first + r.c_second) < 1e-12);  // operators differ by a sign

  CHECK(std::abs(hwp_pair_phase_deg(0.0, 45.0)) < 1e-12);

  SUBCASE("counter-rotated plates follow the linear law") {
    // rotating the first plate by theta and the second by -theta advances the
    // Pancharatnam phase by 4*theta on the Poincare sphere; oracle by direct
    // SU(2) arithmetic
    const double theta = 10.0;
    const double phase = hwp_pair_phase_deg(theta, 45.0 - theta);

    const auto hwp = [](double plate_deg) {
      const double az = deg_to_rad(2.0 * plate_deg);
      return Rotation::from_axis_angle({std::cos(az), std::sin(az), 0.0}, 180.0);
    };
    const Eigen::Matrix2cd base = (compose(hwp(45.0), hwp(0.0))).su2_matrix();
    const Eigen::Matrix2cd rotated =
        (compose(hwp(45.0 - theta), hwp(theta))).su2_matrix();
    const Eigen::Matrix2cd rel = base.adjoint() * rotated;
    const double oracle = rad_to_deg(std::arg(rel(0, 0)));
    CHECK(phase == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(std::abs(std::abs(phase) - 4.0 * theta) < 1e-9);
  }
}
