#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "qwalk/error.hpp"
#include "qwalk/special.hpp"

namespace qwalk {

namespace {

using Complex = std::complex<double>;

// 15-point Kronrod abscissae; odd indices are the embedded 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Integrand {
  double a, b, c;
  double direction;  // +1 integrates f(k), -1 integrates f(-k)

  Complex operator()(double u) const {
    const double k = direction * u;
    const double phase = a * k + b * k * k * k / 3.0;
    const double envelope = std::exp(-c * k * k);
    return {envelope * std::cos(phase), envelope * std::sin(phase)};
  }
};

struct PanelResult {
  Complex kronrod;
  double error;
};

PanelResult gauss_kronrod(const Integrand& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const Complex centre = f(mid);
  Complex k15 = centre * kWgk[7];
  Complex g7 = centre * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[static_cast<std::size_t>(j)];
    const Complex pair = f(mid - dx) + f(mid + dx);
    k15 += pair * kWgk[static_cast<std::size_t>(j)];
    if (j % 2 == 1) g7 += pair * kWg[static_cast<std::size_t>(j / 2)];
  }
  k15 *= half;
  g7 *= half;
  return {k15, std::abs(k15 - g7)};
}

void adaptive(const Integrand& f, double lo, double hi, double tol_per_length, int depth, Complex& sum,
              double& error) {
  const PanelResult r = gauss_kronrod(f, lo, hi);
  if (r.error <= tol_per_length * (hi - lo) || depth >= 40) {
    sum += r.kronrod;
    error += r.error;
    return;
  }
  const double mid = 0.5 * (lo + hi);
  adaptive(f, lo, mid, tol_per_length, depth + 1, sum, error);
  adaptive(f, mid, hi, tol_per_length, depth + 1, sum, error);
}

}  // namespace

OscillatoryResult oscillatory_cubic_gaussian(double a, double b, double c, const OscillatoryOptions& options) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw Error(ErrorKind::InvalidCutoff, "oscillatory_cubic_gaussian: C must be positive");
  }
  if (!(b >= 0.0) || !std::isfinite(b) || !std::isfinite(a)) {
    throw Error(ErrorKind::Config, "oscillatory_cubic_gaussian: requires finite A and B >= 0");
  }
  if (!(options.phase_per_panel > 0.0)) throw Error(ErrorKind::Config, "phase_per_panel must be positive");

  // exp(-C K^2) = 1e-16
  const double cutoff = std::sqrt(-std::log(1e-16) / c);
  const double sqrt_c = std::sqrt(c);
  // Local rate of change of the complex log of the integrand, bounded on a
  // panel by its endpoint values (A + B k^2 is monotone for k >= 0).
  auto rate = [&](double k) { return std::abs(a + b * k * k) + 2.0 * c * k + sqrt_c; };

  const Integrand forward{a, b, c, 1.0};
  const Integrand mirrored{a, b, c, -1.0};
  Complex pos{}, neg{};
  double err_pos = 0.0;
  double err_neg = 0.0;
  int panels = 0;

  double lo = 0.0;
  while (lo < cutoff) {
    const double r_lo = rate(lo);
    double hi = std::min(cutoff, lo + options.phase_per_panel / r_lo);
    for (int it = 0; it < 8; ++it) {
      const double r_max = std::max(r_lo, rate(hi));
      if (r_max * (hi - lo) <= options.phase_per_panel * (1.0 + 1e-12)) break;
      hi = lo + options.phase_per_panel / r_max;
    }
    adaptive(forward, lo, hi, options.local_tolerance, 0, pos, err_pos);
    adaptive(mirrored, lo, hi, options.local_tolerance, 0, neg, err_neg);
    ++panels;
    lo = hi;
  }

  OscillatoryResult out;
  const Complex total = pos + neg;
  out.value = total.real();
  out.imag = total.imag();
  out.est_error = err_pos + err_neg;
  out.panels = panels;

  // The mirrored half is the complex conjugate of the forward half.
  const double scale = std::abs(pos) + 1e-300;
  if (std::abs(pos.real() - neg.real()) > 1e-12 * scale + out.est_error) {
    throw Error(ErrorKind::NonConvergent, "oscillatory_cubic_gaussian: k -> -k symmetry violated");
  }
  if (out.est_error > options.max_error) {
    throw Error(ErrorKind::NonConvergent,
                "oscillatory_cubic_gaussian: error estimate " + std::to_string(out.est_error) + " exceeds bound");
  }
  return out;
}

}  // namespace qwalk
