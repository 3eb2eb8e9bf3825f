#include "qwalk/longwave.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/error.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/special.hpp"
#include "qwalk/table.hpp"

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;

// exp() of anything below this is zero in double precision.
constexpr double kExpFloor = -745.0;

double gaussian_limit(double a, double c) { return std::sqrt(kPi / c) * std::exp(-a * a / (4.0 * c)); }

}  // namespace

double omega_hat(double k, double rho, LatticeScales scales) {
  const double sr = std::sqrt(rho);
  const double x3 = scales.x * scales.x * scales.x;
  return sr * (scales.x / scales.t) * k - sr * (1.0 - rho) * (x3 / scales.t) * k * k * k / 6.0;
}

CutoffSpec::CutoffSpec(double w) : w_(w) {
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw Error(ErrorKind::InvalidCutoff, "cutoff width w must be positive, got " + std::to_string(w));
  }
}

double CutoffSpec::gain(double q) const noexcept { return std::exp(-w_ * w_ * q * q); }

AiryPacket AiryPacket::at(double xi, double tau, double rho, const CutoffSpec& cutoff) {
  const double sr = std::sqrt(rho);
  return {xi - sr * tau, 0.5 * sr * (1.0 - rho) * tau, cutoff.c()};
}

double AiryPacket::closed_form() const {
  if (!(c > 0.0)) throw Error(ErrorKind::InvalidCutoff, "AiryPacket: C must be positive");
  if (b < 0.0) return AiryPacket{-a, -b, c}.closed_form();
  if (b <= kCubicThreshold) return gaussian_limit(a, c);

  // With cb = B^{1/3}, ar = A/cb and cr = C/cb^2 the Airy argument is
  // ar + cr^2 and the exponent is ar*cr + (2/3) cr^3.
  const double cb = std::cbrt(b);
  const double ar = a / cb;
  const double cr = c / (cb * cb);
  const double x = ar + cr * cr;
  const double scale = 2.0 * kPi / cb;

  if (x >= 0.0) {
    // exponent - (2/3) x^{3/2} = -cr^3 s^2 (1 + 2s/3), s = sqrt(1 + ar/cr^2) - 1
    const double eps = ar / (cr * cr);
    const double s = eps / (1.0 + std::sqrt(1.0 + eps));
    const double log_factor = -cr * cr * cr * s * s * (1.0 + 2.0 * s / 3.0);
    if (log_factor < kExpFloor) return 0.0;
    return scale * std::exp(log_factor) * airy_ai_scaled(x).value;
  }
  const double log_factor = ar * cr + 2.0 * cr * cr * cr / 3.0;
  if (log_factor < kExpFloor) return 0.0;
  return scale * std::exp(log_factor) * airy_ai(x).value;
}

OscillatoryResult AiryPacket::quadrature() const {
  if (b < 0.0) return oscillatory_cubic_gaussian(-a, -b, c);
  return oscillatory_cubic_gaussian(a, b, c);
}

double zeta(double xi, double tau, double rho, const CutoffSpec& cutoff, bool verify) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw Error(ErrorKind::Config, "zeta: rho must lie in [0, 1]");
  if (!std::isfinite(xi) || !std::isfinite(tau)) throw Error(ErrorKind::Config, "zeta: xi and tau must be finite");
  const AiryPacket packet = AiryPacket::at(xi, tau, rho, cutoff);
  const double value = packet.closed_form();
  if (verify) {
    const OscillatoryResult reference = packet.quadrature();
    if (std::abs(value - reference.value) > kVerifyTolerance * std::abs(reference.value) + reference.est_error) {
      throw Error(ErrorKind::NonConvergent, "zeta: closed form " + format_real(value) +
                                                " disagrees with quadrature " + format_real(reference.value) +
                                                " at xi=" + std::to_string(xi) + ", tau=" + std::to_string(tau));
    }
  }
  return value;
}

Parity default_parity(double tau) {
  const long long n = std::llround(tau);
  return n % 2 == 0 ? Parity::Even : Parity::Odd;
}

ContinuumFields::ContinuumFields(const WalkState& initial, const CoinParameter& coin, const CutoffSpec& cutoff,
                                 bool verify)
    : coin_(coin), cutoff_(cutoff), verify_(verify), r00_(initial.r(0)), l00_(initial.l(0)) {
  if (coin.rho() == 0.0 || coin.rho() == 1.0) {
    throw Error(ErrorKind::UnsupportedCoin,
                "continuum fields need 0 < rho < 1; the cubic dispersion term vanishes otherwise");
  }
  if (initial.step() != 0) throw Error(ErrorKind::Config, "continuum fields start from an n = 0 state");
  for (int m = initial.first_site(); m <= initial.last_site(); ++m) {
    if (m != 0 && (initial.r(m) != Amplitude{} || initial.l(m) != Amplitude{})) {
      throw Error(ErrorKind::Config, "continuum fields need a walker localized at site 0");
    }
  }
}

ContinuumFields::Values ContinuumFields::at(double xi, double tau) const {
  const double sr = coin_.sqrt_rho();
  const double sc = coin_.sqrt_one_minus_rho();
  const double zp0 = z(xi, tau);
  const double zpm = z(xi - 1.0, tau);
  const double zpp = z(xi + 1.0, tau);
  const double zm0 = z(-xi, tau);
  const double zmm = z(-(xi - 1.0), tau);
  const double zmp = z(-(xi + 1.0), tau);
  Values v;
  v.r_plus = r00_ * (zp0 + sr * zpm) + sc * l00_ * zpp;
  v.r_minus = r00_ * (zm0 - sr * zmm) - sc * l00_ * zmp;
  v.l_plus = l00_ * (zp0 - sr * zpp) + sc * r00_ * zpm;
  v.l_minus = l00_ * (zm0 + sr * zmp) - sc * r00_ * zmm;
  return v;
}

Amplitude ContinuumFields::field(Channel channel, Sign sign, double xi, double tau) const {
  const Values v = at(xi, tau);
  if (channel == Channel::R) return sign == Sign::Plus ? v.r_plus : v.r_minus;
  return sign == Sign::Plus ? v.l_plus : v.l_minus;
}

ContinuumFields continuum_fields(const WalkState& initial, const CoinParameter& coin, const CutoffSpec& cutoff,
                                 bool verify) {
  return ContinuumFields(initial, coin, cutoff, verify);
}

double ContinuumDistribution::total() const noexcept {
  double s = 0.0;
  for (double p : p_total) s += p;
  return s;
}

ContinuumDistribution continuum_probability(const ContinuumFields& fields, const std::vector<double>& xi_grid,
                                            double tau, Parity parity, bool normalize) {
  if (!std::isfinite(tau) || tau < 0.0) throw Error(ErrorKind::Config, "continuum_probability: tau must be >= 0");
  for (double xi : xi_grid) {
    if (!std::isfinite(xi)) throw Error(ErrorKind::Config, "continuum_probability: grid must be finite");
  }
  const double alt = parity == Parity::Even ? 1.0 : -1.0;
  const std::size_t n = xi_grid.size();
  ContinuumDistribution out{xi_grid, std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)};
  parallel_for(n, [&](std::size_t i) {
    const ContinuumFields::Values v = fields.at(xi_grid[i], tau);
    out.p_right[i] = std::norm(v.r_plus + alt * v.r_minus);
    out.p_left[i] = std::norm(v.l_plus + alt * v.l_minus);
    out.p_total[i] = out.p_right[i] + out.p_left[i];
  });
  if (normalize) {
    const double total = out.total();
    if (!(total > 0.0)) throw Error(ErrorKind::EmptyDistribution, "continuum_probability: zero total weight");
    for (std::size_t i = 0; i < n; ++i) {
      out.p_right[i] /= total;
      out.p_left[i] /= total;
      out.p_total[i] = out.p_right[i] + out.p_left[i];
    }
  }
  return out;
}

}  // namespace qwalk
