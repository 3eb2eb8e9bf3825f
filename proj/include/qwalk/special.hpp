#pragma once

namespace qwalk {

struct AiryResult {
  double value = 0.0;
  double est_error = 0.0;
};

// Supported argument range of airy_ai. Above kAiryMax the value underflows;
// below kAiryMin the phase (2/3)|x|^{3/2} is too large to resolve.
inline constexpr double kAiryMin = -1.0e4;
inline constexpr double kAiryMax = 100.0;

// Ai(x) for real x. Maclaurin series in extended precision on [-12, 10];
// outside, the large-|x| asymptotic expansions (exponential decay for x > 0,
// modulated oscillation for x < 0).
// Throws Underflow (x > kAiryMax), Overflow (x < kAiryMin), Config (NaN).
AiryResult airy_ai(double x);

// Ai(x) exp((2/3) x^{3/2}) for x >= 0; finite for every finite x >= 0.
AiryResult airy_ai_scaled(double x);

struct OscillatoryResult {
  double value = 0.0;      // real part of the integral
  double imag = 0.0;       // imaginary part; cancels by k -> -k symmetry
  double est_error = 0.0;  // accumulated Gauss-Kronrod error estimate
  int panels = 0;
};

struct OscillatoryOptions {
  // Phase advance allowed across one panel, in radians.
  double phase_per_panel = 3.141592653589793;
  // Per-unit-length local error target used by adaptive bisection.
  double local_tolerance = 1e-13;
  // est_error above this raises NonConvergent.
  double max_error = 1e-8;
};

// int_{-K}^{K} dk exp(i A k + i (B/3) k^3 - C k^2) with exp(-C K^2) <= 1e-16,
// by panel-wise adaptive Gauss-Kronrod (7/15) quadrature. The panels follow
// the local phase velocity A + B k^2. Requires C > 0 and B >= 0.
OscillatoryResult oscillatory_cubic_gaussian(double a, double b, double c, const OscillatoryOptions& options = {});

}  // namespace qwalk
