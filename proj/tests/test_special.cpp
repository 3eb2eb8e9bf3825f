#include <doctest.h>

#include <boost/math/special_functions/airy.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "qwalk/error.hpp"
#include "qwalk/special.hpp"

using namespace qwalk;
using std::numbers::pi;

namespace {

double ai(double x) { return airy_ai(x).value; }

ErrorKind airy_error(double x) {
  try {
    airy_ai(x);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error for x = " << x);
  return ErrorKind::Io;
}

}  // namespace

TEST_CASE("Ai(0) from the Gamma function") {
  const double expected = std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0);
  CHECK(ai(0.0) == doctest::Approx(expected).epsilon(1e-15));
  CHECK(ai(0.0) == doctest::Approx(0.3550280539).epsilon(1e-10));
}

TEST_CASE("reference values") {
  CHECK(ai(10.0) == doctest::Approx(1.1047532552898686e-10).epsilon(1e-13));
  CHECK(ai(-12.0) == doctest::Approx(-0.066555175054373129).epsilon(1e-12));
  CHECK(ai(6.5) == doctest::Approx(2.7958823432049136e-06).epsilon(1e-13));
  CHECK(ai(10.0) < 1e-9);
}

TEST_CASE("agreement with an independent implementation on [-120, 30]") {
  for (double x = -120.0; x <= 30.0; x += 0.0625) {
    const double ref = boost::math::airy_ai(x);
    CHECK(std::abs(ai(x) - ref) <= 1e-10 * std::abs(ref) + 1e-13);
  }
}

TEST_CASE("relative accuracy around the method switch points") {
  for (double x : {-12.5, -12.0001, -12.0, -11.9999, -11.5, 9.5, 9.9999, 10.0, 10.0001, 10.5, 29.9}) {
    const double ref = boost::math::airy_ai(x);
    CHECK(std::abs(ai(x) - ref) <= 1e-12 * std::abs(ref) + 1e-15);
  }
}

TEST_CASE("monotone decay for positive arguments") {
  double prev = ai(0.0);
  for (double x = 0.25; x <= 100.0; x += 0.25) {
    const double v = ai(x);
    CHECK(v > 0.0);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("Airy differential equation Ai'' = x Ai") {
  const double h = 5e-3;
  for (double x = -20.0; x <= 5.0; x += 0.1) {
    const double d2 = (-ai(x + 2 * h) + 16 * ai(x + h) - 30 * ai(x) + 16 * ai(x - h) - ai(x - 2 * h)) / (12 * h * h);
    CHECK(std::abs(d2 - x * ai(x)) <= 1e-6);
  }
}

TEST_CASE("scaled Airy function") {
  for (double x = 0.0; x <= 60.0; x += 0.5) {
    const double z = 2.0 / 3.0 * x * std::sqrt(x);
    CHECK(airy_ai_scaled(x).value * std::exp(-z) == doctest::Approx(ai(x)).epsilon(1e-13));
  }
  // Large x: Ai(x) exp(zeta) -> 1/(2 sqrt(pi) x^{1/4}).
  const double x = 1e8;
  CHECK(airy_ai_scaled(x).value == doctest::Approx(0.5 / std::sqrt(pi) / std::pow(x, 0.25)).epsilon(1e-10));
  CHECK_THROWS_AS(airy_ai_scaled(-1.0), Error);
}

TEST_CASE("error estimates are nonnegative") {
  for (double x : {-5000.0, -50.0, -3.0, 0.0, 4.0, 20.0, 80.0}) CHECK(airy_ai(x).est_error >= 0.0);
}

TEST_CASE("out-of-range arguments fail loudly") {
  CHECK(airy_error(kAiryMax + 1.0) == ErrorKind::Underflow);
  CHECK(airy_error(kAiryMin - 1.0) == ErrorKind::Overflow);
  CHECK(airy_error(std::nan("")) == ErrorKind::Config);
  CHECK_NOTHROW(airy_ai(kAiryMax));
  CHECK_NOTHROW(airy_ai(kAiryMin));
}

TEST_CASE("oscillatory quadrature: Gaussian limits") {
  CHECK(oscillatory_cubic_gaussian(0.0, 0.0, 1.0).value == doctest::Approx(std::sqrt(pi)).epsilon(1e-14));
  for (double a : {-3.0, -0.4, 0.0, 1.0, 5.0}) {
    for (double c : {0.0625, 0.16, 1.0, 4.0}) {
      const double expected = std::sqrt(pi / c) * std::exp(-a * a / (4 * c));
      CHECK(std::abs(oscillatory_cubic_gaussian(a, 0.0, c).value - expected) <= 1e-10);
    }
  }
}

TEST_CASE("oscillatory quadrature of a long-time packet against the Airy form") {
  const double a = -0.4, b = 35.355 / 4, c = 0.16;
  const OscillatoryResult q = oscillatory_cubic_gaussian(a, b, c);
  const double cb = std::cbrt(b);
  const double closed =
      2 * pi / cb * std::exp((3 * a * b * c + 2 * c * c * c) / (3 * b * b)) * ai((a * b + c * c) / (cb * cb * cb * cb));
  CHECK(std::isfinite(q.value));
  CHECK(std::abs(q.value - closed) <= 1e-6 * std::abs(closed));
  CHECK(q.est_error <= 1e-8);
  CHECK(q.panels > 0);
}

TEST_CASE("oscillatory quadrature is stable under panel refinement and real") {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> ua(-60.0, 60.0), ub(0.0, 40.0), uc(0.06, 0.4);
  OscillatoryOptions fine;
  fine.phase_per_panel = pi / 2;
  for (int i = 0; i < 25; ++i) {
    const double a = ua(rng), b = ub(rng), c = uc(rng);
    const OscillatoryResult q1 = oscillatory_cubic_gaussian(a, b, c);
    const OscillatoryResult q2 = oscillatory_cubic_gaussian(a, b, c, fine);
    CHECK(std::abs(q1.value - q2.value) <= 1e-9);
    CHECK(std::abs(q1.imag) <= 1e-10 * std::abs(q1.value) + 1e-300);
  }
}

TEST_CASE("oscillatory quadrature argument checks") {
  try {
    oscillatory_cubic_gaussian(0.0, 1.0, 0.0);
    FAIL("C = 0 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidCutoff);
  }
  try {
    oscillatory_cubic_gaussian(0.0, -1.0, 1.0);
    FAIL("B < 0 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Config);
  }
  OscillatoryOptions strict;
  strict.max_error = 1e-40;
  try {
    oscillatory_cubic_gaussian(3.0, 20.0, 0.1, strict);
    FAIL("unachievable error bound accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonConvergent);
  }
}
