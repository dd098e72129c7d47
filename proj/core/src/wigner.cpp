#include "phasecart/wigner.hpp"

#include <array>
#include <cmath>

#include "phasecart/errors.hpp"

namespace phasecart {
namespace {

constexpr int kMaxFactorial = 100;

const std::array<double, kMaxFactorial + 1>& factorials() {
  static const auto table = [] {
    std::array<double, kMaxFactorial + 1> f{};
    f[0] = 1.0;
    for (int i = 1; i <= kMaxFactorial; ++i) f[i] = f[i - 1] * i;
    return f;
  }();
  return table;
}

/// d^j_{m'm}(beta) with doubled indices; beta in radians, beta in [0, pi].
double little_d(int two_j, int two_mp, int two_m, double beta) {
  const auto& fact = factorials();
  const int jpm = (two_j + two_m) / 2;
  const int jmm = (two_j - two_m) / 2;
  const int jpmp = (two_j + two_mp) / 2;
  const int jmmp = (two_j - two_mp) / 2;
  const int mu = (two_mp - two_m) / 2;

  const double c = std::cos(0.5 * beta);
  const double s = std::sin(0.5 * beta);
  const double pref = std::sqrt(fact[jpmp] * fact[jmmp] * fact[jpm] * fact[jmm]);

  double sum = 0.0;
  const int k_lo = std::max(0, -mu);
  const int k_hi = std::min(jpm, jmmp);
  for (int k = k_lo; k <= k_hi; ++k) {
    const double denom = fact[jpm - k] * fact[k] * fact[mu + k] * fact[jmmp - k];
    const double sign = ((mu + k) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * std::pow(c, two_j - mu - 2 * k) * std::pow(s, mu + 2 * k) / denom;
  }
  return pref * sum;
}

struct EulerZYZ {
  double alpha, beta, gamma;
};

/// ZYZ angles reproducing the SU(2) element exactly, sign included (alpha is
/// allowed outside [0, 2pi) so that e.g. -I maps to alpha = -2pi).
EulerZYZ euler_of(const Rotation& r) {
  const std::complex<double> u00(r.w, -r.z);
  const std::complex<double> u10(r.y, -r.x);
  const double cb = std::abs(u00);
  const double sb = std::abs(u10);
  EulerZYZ e{0.0, 2.0 * std::atan2(sb, cb), 0.0};
  if (sb < 1e-15) {
    e.alpha = -2.0 * std::arg(u00);
  } else if (cb < 1e-15) {
    e.alpha = 2.0 * std::arg(u10);
  } else {
    e.alpha = -std::arg(u00) + std::arg(u10);
    e.gamma = -std::arg(u00) - std::arg(u10);
  }
  return e;
}

}  // namespace

Eigen::MatrixXcd wigner_d_matrix(int two_j, const Rotation& r) {
  if (two_j < 1 || two_j > kMaxTwoJ) {
    throw ConfigError("wigner_d: 2j must be in [1, " + std::to_string(kMaxTwoJ) + "]");
  }
  const EulerZYZ e = euler_of(r);
  const int dim = two_j + 1;
  Eigen::MatrixXcd d(dim, dim);
  for (int row = 0; row < dim; ++row) {
    const int two_mp = two_j - 2 * row;
    const std::complex<double> pa =
        std::exp(std::complex<double>(0.0, -0.5 * two_mp * e.alpha));
    for (int col = 0; col < dim; ++col) {
      const int two_m = two_j - 2 * col;
      const std::complex<double> pg =
          std::exp(std::complex<double>(0.0, -0.5 * two_m * e.gamma));
      d(row, col) = pa * little_d(two_j, two_mp, two_m, e.beta) * pg;
    }
  }
  return d;
}

SpinState apply_rotation(const Rotation& r, const SpinState& s) {
  SpinState out;
  out.two_j = s.two_j;
  if (s.two_j == 1) {
    out.amplitudes = r.su2_matrix() * s.amplitudes;
  } else {
    out.amplitudes = wigner_d_matrix(s.two_j, r) * s.amplitudes;
  }
  return out;
}

}  // namespace phasecart
