#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/error.hpp"
#include "qwalk/special.hpp"

namespace qwalk {

namespace {

#if defined(__SIZEOF_FLOAT128__)
__extension__ typedef __float128 Wide;
constexpr double kWideEpsilon = 1.9259299443872359e-34;
#else
typedef long double Wide;
constexpr double kWideEpsilon = static_cast<double>(__LDBL_EPSILON__);
#endif

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

// Ai(0) and -Ai'(0) as double-double pairs.
constexpr double kAi0Hi = 0.3550280538878172;
constexpr double kAi0Lo = 2.05233632436212e-17;
constexpr double kDAi0Hi = 0.2588194037928068;
constexpr double kDAi0Lo = -2.522243111610832e-17;

constexpr double kSeriesLow = -12.0;
constexpr double kSeriesHigh = 10.0;

// Ai(x) = Ai(0) f(x) + Ai'(0) g(x) with
//   f = sum_k x^{3k} / ((2*3)(5*6)...((3k-1)(3k)))
//   g = sum_k x^{3k+1} / ((3*4)(6*7)...((3k)(3k+1)))
// Summed in Wide so the cancellation for x > 0 stays below double rounding.
AiryResult maclaurin(double x) {
  const Wide xw = x;
  const Wide x3 = xw * xw * xw;
  Wide f = 1, g = xw, tf = 1, tg = xw;
  Wide magnitude = 1 + wide_abs(xw);
  for (int k = 1; k < 400; ++k) {
    tf *= x3 / (Wide(3 * k - 1) * Wide(3 * k));
    tg *= x3 / (Wide(3 * k) * Wide(3 * k + 1));
    f += tf;
    g += tg;
    magnitude += wide_abs(tf) + wide_abs(tg);
    if (wide_abs(tf) + wide_abs(tg) < Wide(1e-40) * magnitude) break;
  }
  const Wide c1 = Wide(kAi0Hi) + Wide(kAi0Lo);
  const Wide c2 = Wide(kDAi0Hi) + Wide(kDAi0Lo);
  const double value = static_cast<double>(c1 * f - c2 * g);
  // Constants carry ~1e-32 relative error; summation rounding is kWideEpsilon.
  const double rounding = static_cast<double>(magnitude) * (1e-32 + 64 * kWideEpsilon);
  return {value, rounding + std::abs(value) * 0x1p-53};
}

// Successive ratio u_k / u_{k-1} of the Airy asymptotic coefficients.
double u_ratio(int k) {
  const double kk = k;
  return (6 * kk - 5) * (6 * kk - 3) * (6 * kk - 1) / ((2 * kk - 1) * 216 * kk);
}

// sum_k (-1)^k u_k / zeta^k, truncated at the smallest term.
AiryResult decaying_series(double zeta) {
  double sum = 1.0;
  double term = 1.0;
  double omitted = 0.0;
  for (int k = 1; k < 200; ++k) {
    const double next = -term * u_ratio(k) / zeta;
    if (std::abs(next) >= std::abs(term)) {
      omitted = std::abs(next);
      break;
    }
    term = next;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) {
      omitted = std::abs(term * u_ratio(k + 1) / zeta);
      break;
    }
  }
  return {sum, omitted};
}

// x > kSeriesHigh: Ai(x) exp(zeta) = sum / (2 sqrt(pi) x^{1/4}).
AiryResult scaled_positive_asymptotic(double x) {
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  const AiryResult s = decaying_series(zeta);
  const double pre = 0.5 * std::numbers::inv_sqrtpi / std::sqrt(std::sqrt(x));
  return {pre * s.value, pre * s.est_error + std::abs(pre * s.value) * 0x1p-52};
}

// x < kSeriesLow, z = -x:
// Ai(-z) = [cos(zeta - pi/4) P + sin(zeta - pi/4) Q] / (sqrt(pi) z^{1/4}),
// P = sum_k (-1)^k u_{2k}/zeta^{2k}, Q = sum_k (-1)^k u_{2k+1}/zeta^{2k+1}.
AiryResult oscillatory_asymptotic(double x) {
  const double z = -x;
  const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
  double p = 1.0;
  double q = 0.0;
  double v = 1.0;  // u_k / zeta^k
  double omitted = 0.0;
  for (int k = 1; k < 200; ++k) {
    const double next = v * u_ratio(k) / zeta;
    if (next >= v) {
      omitted = next;
      break;
    }
    v = next;
    // k = 2j -> (-1)^j into P; k = 2j+1 -> (-1)^j into Q.
    const int j = k / 2;
    const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      p += sgn * v;
    } else {
      q += sgn * v;
    }
    if (v < 1e-18) {
      omitted = v * u_ratio(k + 1) / zeta;
      break;
    }
  }
  const double c = std::cos(zeta);
  const double s = std::sin(zeta);
  const double cos_shift = (c + s) * std::numbers::sqrt2 * 0.5;  // cos(zeta - pi/4)
  const double sin_shift = (s - c) * std::numbers::sqrt2 * 0.5;  // sin(zeta - pi/4)
  const double pre = std::numbers::inv_sqrtpi / std::sqrt(std::sqrt(z));
  const double value = pre * (cos_shift * p + sin_shift * q);
  // Phase error from rounding zeta is ~ zeta * 2^-52.
  const double err = pre * (omitted + zeta * 0x1p-51) + std::abs(value) * 0x1p-52;
  return {value, err};
}

}  // namespace

AiryResult airy_ai(double x) {
  if (std::isnan(x)) throw Error(ErrorKind::Config, "airy_ai: argument is NaN");
  if (x > kAiryMax) throw Error(ErrorKind::Underflow, "airy_ai: Ai(" + std::to_string(x) + ") underflows");
  if (x < kAiryMin) {
    throw Error(ErrorKind::Overflow, "airy_ai: phase of Ai(" + std::to_string(x) + ") exceeds double resolution");
  }
  if (x >= kSeriesLow && x <= kSeriesHigh) return maclaurin(x);
  if (x < kSeriesLow) return oscillatory_asymptotic(x);
  const AiryResult scaled = scaled_positive_asymptotic(x);
  const double decay = std::exp(-2.0 / 3.0 * x * std::sqrt(x));
  return {scaled.value * decay, scaled.est_error * decay};
}

AiryResult airy_ai_scaled(double x) {
  if (!(x >= 0.0) || std::isinf(x)) {
    throw Error(ErrorKind::Config, "airy_ai_scaled: argument must be finite and nonnegative");
  }
  if (x > kSeriesHigh) return scaled_positive_asymptotic(x);
  const AiryResult r = maclaurin(x);
  const double growth = std::exp(2.0 / 3.0 * x * std::sqrt(x));
  return {r.value * growth, r.est_error * growth};
}

}  // namespace qwalk
