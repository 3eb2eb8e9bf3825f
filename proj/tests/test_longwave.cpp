#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qwalk/error.hpp"
#include "qwalk/longwave.hpp"
#include "qwalk/spectral.hpp"
#include "support.hpp"

using namespace qwalk;
using std::numbers::pi;

namespace {

std::vector<double> grid(double lo, double hi, double h) {
  std::vector<double> g;
  for (int i = 0; lo + i * h <= hi + 1e-9; ++i) g.push_back(lo + i * h);
  return g;
}

// Relative error of the closed form against the quadrature oracle, with the
// oracle's own error estimate as the floor.
bool agrees_with_oracle(const AiryPacket& p) {
  const OscillatoryResult q = p.quadrature();
  return std::abs(p.closed_form() - q.value) <= 1e-6 * std::abs(q.value) + q.est_error;
}

}  // namespace

TEST_CASE("cubic dispersion") {
  CHECK(omega_hat(0.0, 0.5) == 0.0);
  for (double k : {-2.0, 0.3, 1.7}) CHECK(omega_hat(k, 1.0) == k);
  double worst = 0.0;
  for (double k = -0.3; k <= 0.3; k += 0.01) {
    if (std::abs(k) < 1e-3) continue;
    worst = std::max(worst, std::abs(omega_hat(k, 0.5) - omega0(k, 0.5)) / std::pow(std::abs(k), 5));
  }
  // The k^5 coefficient of asin(sin(k)/sqrt2) is 1/(40 sqrt2) - ... ; bounded by 0.1.
  CHECK(worst < 0.1);
  CHECK(omega_hat(0.2, 0.5, {2.0, 3.0}) == doctest::Approx(std::sqrt(0.5) * (2.0 / 3.0) * 0.2 -
                                                            std::sqrt(0.5) * 0.5 * (8.0 / 3.0) * 0.008 / 6.0));
}

TEST_CASE("Gaussian cutoff") {
  const CutoffSpec g(0.4);
  CHECK(g.gain(0.0) == 1.0);
  CHECK(g.c() == doctest::Approx(0.16));
  double prev = 1.0;
  for (double q = 0.1; q < 10.0; q += 0.1) {
    CHECK(g.gain(q) == g.gain(-q));
    CHECK(g.gain(q) < prev);
    prev = g.gain(q);
  }
  CHECK(CutoffSpec().w() == 0.4);
  for (double bad : {0.0, -0.1, std::nan("")}) {
    try {
      CutoffSpec c(bad);
      FAIL("accepted w = " << bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidCutoff);
    }
  }
}

TEST_CASE("Gaussian limit of the packet integral") {
  for (double xi : {-2.0, 0.0, 0.7, 3.0}) {
    const double expected = std::sqrt(pi / 0.16) * std::exp(-xi * xi / 0.64);
    CHECK(zeta(xi, 0.0, 0.5, CutoffSpec(0.4)) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(zeta(xi + 3.0, 3.0, 1.0, CutoffSpec(0.4)) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(zeta(xi, 5.0, 0.0, CutoffSpec(0.4)) == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("closed form at a ballistic front against the oracle") {
  const AiryPacket p = AiryPacket::at(141.0, 200.0, 0.5, CutoffSpec(0.4));
  const OscillatoryResult q = p.quadrature();
  CHECK(std::abs(p.closed_form() - q.value) <= 1e-6 * std::abs(q.value));
  CHECK(std::abs(q.imag) <= 1e-10 * std::abs(q.value));
}

TEST_CASE("closed form against the oracle at random points") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> ut(0.0, 200.0), ur(0.05, 0.95), uw(0.25, 0.6), uf(-1.2, 1.2);
  for (int i = 0; i < 100; ++i) {
    const double tau = ut(rng);
    const double rho = ur(rng);
    const double xi = uf(rng) * (tau + 5.0);
    const AiryPacket p = AiryPacket::at(xi, tau, rho, CutoffSpec(uw(rng)));
    CHECK_MESSAGE(agrees_with_oracle(p), "xi=" << xi << " tau=" << tau << " rho=" << rho);
  }
}

TEST_CASE("closed form across the small-B crossover") {
  for (double b : {2e-9, 1e-7, 1e-5, 1e-3}) {
    for (double a : {-1.0, 0.0, 0.5, 2.0}) {
      const AiryPacket p{a, b, 0.16};
      CHECK(std::abs(p.closed_form() - p.quadrature().value) <= 1e-9);
    }
  }
  // Negative B is the mirror image.
  const AiryPacket neg{1.3, -2.0, 0.2};
  CHECK(neg.closed_form() == AiryPacket{-1.3, 2.0, 0.2}.closed_form());
}

TEST_CASE("verify flag runs the oracle") {
  CHECK(zeta(100.0, 150.0, 0.4, CutoffSpec(0.3), true) == zeta(100.0, 150.0, 0.4, CutoffSpec(0.3)));
}

TEST_CASE("continuum field construction") {
  const WalkState balanced = qwalk::testing::balanced_initial();
  for (double rho : {0.0, 1.0}) {
    try {
      ContinuumFields f(balanced, CoinParameter(rho));
      FAIL("accepted rho = " << rho);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnsupportedCoin);
    }
  }
  CHECK_THROWS_AS(ContinuumFields(evolve(balanced, CoinParameter(0.5), 1), CoinParameter(0.5)), Error);
  const WalkState offset = WalkState::from_rows(0, LatticeRow::delta(1), LatticeRow());
  CHECK_THROWS_AS(ContinuumFields(offset, CoinParameter(0.5)), Error);
}

TEST_CASE("a pure right mover feeds L through one packet only") {
  const double rho = 0.5;
  const CutoffSpec cut(0.4);
  const ContinuumFields f = continuum_fields(make_initial(1.0, 0.0), CoinParameter(rho), cut);
  const double sc = std::sqrt(1 - rho);
  for (double xi : {-30.0, 0.0, 12.5, 60.0}) {
    const double tau = 80.0;
    CHECK(std::abs(f.field(Channel::L, Sign::Plus, xi, tau) - sc * zeta(xi - 1, tau, rho, cut)) <= 1e-15);
    CHECK(std::abs(f.field(Channel::L, Sign::Minus, xi, tau) + sc * zeta(-(xi - 1), tau, rho, cut)) <= 1e-15);
  }
}

TEST_CASE("initial profile is three narrow Gaussians on the first two rows") {
  std::mt19937_64 rng(8);
  const CoinParameter coin(0.35);
  const WalkState init = qwalk::testing::random_initial(rng);
  const WalkState one = evolve(init, coin, 1);
  const CutoffSpec cut(0.1);
  const ContinuumFields f(init, coin, cut);
  const double peak = std::sqrt(pi / cut.c());
  for (int m : {-1, 0, 1}) {
    const ContinuumFields::Values v = f.at(m, 0.0);
    // A+ = a_{0,0} G(0) + a_{1,1} G(1) + a_{-1,1} G(-1) on R, and the analogue on L.
    const Amplitude r_expected = m == 0 ? init.r(0) : one.r(m);
    const Amplitude l_expected = m == 0 ? init.l(0) : one.l(m);
    CHECK(std::abs(v.r_plus / peak - r_expected) <= 1e-9);
    CHECK(std::abs(v.l_plus / peak - l_expected) <= 1e-9);
    // At tau = 0, A+ + A- and A+ - A- are twice the n = 0 and n = 1 rows.
    CHECK(std::abs((v.r_plus + v.r_minus) / (2 * peak) - init.r(m)) <= 1e-9);
    CHECK(std::abs((v.l_plus - v.l_minus) / (2 * peak) - one.l(m)) <= 1e-9);
  }
}

TEST_CASE("continuum distribution of the balanced spinor") {
  const ContinuumFields f(qwalk::testing::balanced_initial(), CoinParameter(0.5), CutoffSpec(0.4));
  const std::vector<double> xs = grid(-250.0, 250.0, 0.5);
  const ContinuumDistribution d = continuum_probability(f, xs, 200.0, Parity::Even);
  const std::size_t n = xs.size();
  const double pmax = *std::max_element(d.p_total.begin(), d.p_total.end());
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(d.p_total[i] == d.p_right[i] + d.p_left[i]);
    CHECK(std::abs(d.p_total[i] - d.p_total[n - 1 - i]) <= 1e-9 * pmax);
  }
  // Dominant peaks near the ballistic fronts.
  const auto right = std::max_element(d.p_total.begin() + n / 2, d.p_total.end());
  const double xpeak = xs[static_cast<std::size_t>(right - d.p_total.begin())];
  CHECK(xpeak >= 130.0);
  CHECK(xpeak <= 146.0);
  const double p0 = d.p_total[n / 2];
  CHECK(p0 > 0.0);
  CHECK(p0 < 0.2 * pmax);
}

TEST_CASE("cutoff width trend") {
  const WalkState balanced = qwalk::testing::balanced_initial();
  auto central = [&](double w) {
    const ContinuumFields f(balanced, CoinParameter(0.5), CutoffSpec(w));
    return continuum_probability(f, {0.0}, 200.0, Parity::Even).p_total[0];
  };
  CHECK(central(0.55) < central(0.4));

  const ContinuumFields wide(balanced, CoinParameter(0.5), CutoffSpec(0.25));
  const ContinuumDistribution d = continuum_probability(wide, grid(-250.0, 250.0, 0.5), 200.0, Parity::Even, true);
  double tail = 0.0;
  for (std::size_t i = 0; i < d.xi.size(); ++i) {
    if (std::abs(d.xi[i]) > 200.0 / std::sqrt(2.0) + 10.0) tail += d.p_total[i];
  }
  CHECK(tail > 0.01);
}

TEST_CASE("normalization and parity") {
  const ContinuumFields f(qwalk::testing::balanced_initial(), CoinParameter(0.3), CutoffSpec(0.4));
  const std::vector<double> xs = grid(-60.0, 60.0, 1.0);
  const ContinuumDistribution even = continuum_probability(f, xs, 50.0, Parity::Even, true);
  CHECK(even.total() == doctest::Approx(1.0).epsilon(1e-13));
  const ContinuumDistribution odd = continuum_probability(f, xs, 50.0, Parity::Odd);
  const ContinuumFields::Values v = f.at(3.0, 50.0);
  CHECK(odd.p_right[63] == doctest::Approx(std::norm(v.r_plus - v.r_minus)).epsilon(1e-14));
  CHECK(default_parity(200.0) == Parity::Even);
  CHECK(default_parity(199.4) == Parity::Odd);
  CHECK(default_parity(0.2) == Parity::Even);
  CHECK_THROWS_AS(continuum_probability(f, xs, -1.0, Parity::Even), Error);
}

TEST_CASE("fields satisfy the third-order transport equation") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ut(20.0, 200.0), uoff(-15.0, 5.0), ur(0.2, 0.8);
  const double h = 1e-2;
  for (int i = 0; i < 30; ++i) {
    const double rho = ur(rng);
    const double tau = ut(rng);
    const double sr = std::sqrt(rho);
    const ContinuumFields f(qwalk::testing::balanced_initial(), CoinParameter(rho), CutoffSpec(0.4));
    for (Sign sign : {Sign::Plus, Sign::Minus}) {
      const double s = sign_value(sign);
      const double xi = s * (sr * tau + uoff(rng));
      auto a = [&](double x, double t) { return f.field(Channel::R, sign, x, t); };
      const Amplitude dt = (a(xi, tau + h) - a(xi, tau - h)) / (2 * h);
      const Amplitude dx = (a(xi + h, tau) - a(xi - h, tau)) / (2 * h);
      const Amplitude dx3 =
          (a(xi + 2 * h, tau) - 2.0 * a(xi + h, tau) + 2.0 * a(xi - h, tau) - a(xi - 2 * h, tau)) / (2 * h * h * h);
      const Amplitude rhs = -s * sr * (dx + (1 - rho) / 6 * dx3);
      const double scale = std::abs(dt) + sr * std::abs(dx) + sr * (1 - rho) / 6 * std::abs(dx3);
      CHECK(std::abs(dt - rhs) <= 1e-4 * scale);
    }
  }
}

TEST_CASE("packet peak moves at the group velocity sqrt(rho)") {
  const double rho = 0.5;
  const ContinuumFields f(make_initial(1.0, 0.0), CoinParameter(rho), CutoffSpec(0.4));
  auto peak = [&](double tau) {
    double best = 0.0, arg = 0.0;
    for (double xi = std::sqrt(rho) * tau - 20.0; xi <= std::sqrt(rho) * tau + 10.0; xi += 0.01) {
      const double p = std::norm(f.field(Channel::R, Sign::Plus, xi, tau));
      if (p > best) {
        best = p;
        arg = xi;
      }
    }
    return arg;
  };
  const double v = (peak(200.0) - peak(100.0)) / 100.0;
  CHECK(std::abs(v / std::sqrt(rho) - 1.0) <= 0.02);
}

TEST_CASE("oscillation spacing behind the front shrinks as rho grows") {
  auto spacing = [](double rho) {
    const double tau = 100.0;
    const CutoffSpec cut(0.25);
    std::vector<double> zeros;
    double prev_x = std::sqrt(rho) * tau;
    double prev = zeta(prev_x, tau, rho, cut);
    for (double xi = prev_x; zeros.size() < 3; xi -= 0.01) {
      const double v = zeta(xi, tau, rho, cut);
      if ((v < 0) != (prev < 0)) zeros.push_back(xi);
      prev = v;
    }
    return zeros[1] - zeros[2];
  };
  const double s3 = spacing(0.3), s5 = spacing(0.5), s7 = spacing(0.7);
  CHECK(s7 < s5);
  CHECK(s5 < s3);
  // Zeros of Ai map to xi through B^{1/3}, B = sqrt(rho)(1-rho) tau/2.
  const double ratio = std::cbrt(std::sqrt(0.7) * 0.3 / (std::sqrt(0.3) * 0.7));
  CHECK(s7 / s3 == doctest::Approx(ratio).epsilon(0.02));
}
