#include "qwalk/conventions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/error.hpp"
#include "qwalk/quadrature.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.70710678118654752440;

std::pair<Amplitude, Amplitude> nv_integrals(int m, int n, int intervals) {
  const TrapezoidRule rule = TrapezoidRule::brillouin_zone(intervals, kPi);
  Amplitude r{}, l{};
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    const double k = rule.nodes[j];
    const double c = std::cos(k);
    const double root = std::sqrt(1.0 + c * c);
    const double w0 = omega0(k, 0.5);
    r += rule.weights[j] * std::polar(1.0 / root, k * (1 - m) - w0 * n);
    l += rule.weights[j] * std::polar(1.0 + c / root, -k * m - w0 * n);
  }
  // [1 + (-1)^{n+m}] X/(4pi) with n + m even
  const double prefactor = 2.0 / (4.0 * kPi);
  return {prefactor * r, prefactor * l};
}

}  // namespace

NVState to_nv(const WalkState& s) {
  const int h = s.half_width();
  LatticeRow r_hat = LatticeRow::zeros(1 - h, 1 + h);
  LatticeRow l_hat = LatticeRow::zeros(-1 - h, -1 + h);
  for (int m = r_hat.first_site(); m <= r_hat.last_site(); ++m) r_hat[m] = s.l(1 - m);
  for (int m = l_hat.first_site(); m <= l_hat.last_site(); ++m) l_hat[m] = s.r(-m - 1);
  return {s.step(), std::move(r_hat), std::move(l_hat)};
}

WalkState from_nv(const NVState& s) {
  LatticeRow r, l;
  if (!s.l_hat.empty()) {
    r = LatticeRow::zeros(-s.l_hat.last_site() - 1, -s.l_hat.first_site() - 1);
    for (int m = r.first_site(); m <= r.last_site(); ++m) r[m] = s.l_hat.at(-m - 1);
  }
  if (!s.r_hat.empty()) {
    l = LatticeRow::zeros(1 - s.r_hat.last_site(), 1 - s.r_hat.first_site());
    for (int m = l.first_site(); m <= l.last_site(); ++m) l[m] = s.r_hat.at(1 - m);
  }
  return WalkState::from_rows(s.step, r, l);
}

NVState nv_initial() { return {0, LatticeRow::zeros(0, 0), LatticeRow::delta(0)}; }

NVState nv_step(const NVState& s) {
  const bool has_r = !s.r_hat.empty();
  const bool has_l = !s.l_hat.empty();
  if (!has_r && !has_l) return {s.step + 1, {}, {}};
  int lo = has_r ? s.r_hat.first_site() : s.l_hat.first_site();
  int hi = has_r ? s.r_hat.last_site() : s.l_hat.last_site();
  if (has_l) {
    lo = std::min(lo, s.l_hat.first_site());
    hi = std::max(hi, s.l_hat.last_site());
  }
  LatticeRow r_hat = LatticeRow::zeros(lo + 1, hi + 1);
  LatticeRow l_hat = LatticeRow::zeros(lo - 1, hi - 1);
  for (int m = r_hat.first_site(); m <= r_hat.last_site(); ++m) {
    r_hat[m] = kInvSqrt2 * (s.l_hat.at(m - 1) - s.r_hat.at(m - 1));
  }
  for (int m = l_hat.first_site(); m <= l_hat.last_site(); ++m) {
    l_hat[m] = kInvSqrt2 * (s.l_hat.at(m + 1) + s.r_hat.at(m + 1));
  }
  return {s.step + 1, std::move(r_hat), std::move(l_hat)};
}

NVState nv_evolve(NVState state, int steps) {
  if (steps < 0) throw Error(ErrorKind::Config, "nv_evolve: steps must be nonnegative");
  for (int i = 0; i < steps; ++i) state = nv_step(state);
  return state;
}

std::pair<Amplitude, Amplitude> nv_closed_form(int m, int n, int nodes) {
  if (nodes < kMinimumNodes) throw Error(ErrorKind::Config, "nv_closed_form: at least 512 nodes required");
  if (n < 0) throw Error(ErrorKind::Config, "nv_closed_form: n must be nonnegative");
  if ((n + m) % 2 != 0) return {Amplitude{}, Amplitude{}};

  const auto fine = nv_integrals(m, n, nodes);
  const auto coarse = nv_integrals(m, n, nodes / 2);
  const double change = std::max(std::abs(fine.first - coarse.first), std::abs(fine.second - coarse.second));
  if (change > 1e-8) {
    throw Error(ErrorKind::NonConvergent, "nv_closed_form: quadrature not converged at m=" + std::to_string(m) +
                                              ", n=" + std::to_string(n));
  }
  return fine;
}

}  // namespace qwalk
