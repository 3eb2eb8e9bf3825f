#include "qwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwalk/error.hpp"

namespace qwalk {

CoinParameter::CoinParameter(double rho) : rho_(rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw Error(ErrorKind::Config, "coin parameter rho must lie in [0, 1], got " + std::to_string(rho));
  }
  sqrt_rho_ = std::sqrt(rho);
  sqrt_cmp_ = std::sqrt(1.0 - rho);
}

std::array<std::array<double, 2>, 2> CoinParameter::matrix() const noexcept {
  return {{{sqrt_rho_, sqrt_cmp_}, {sqrt_cmp_, -sqrt_rho_}}};
}

std::array<Amplitude, 2> CoinParameter::apply(const std::array<Amplitude, 2>& s) const noexcept {
  return {sqrt_rho_ * s[0] + sqrt_cmp_ * s[1], sqrt_cmp_ * s[0] - sqrt_rho_ * s[1]};
}

WalkState::WalkState(int step, int half_width, std::vector<Amplitude> r, std::vector<Amplitude> l)
    : step_(step), half_width_(half_width), r_(std::move(r)), l_(std::move(l)) {
  const auto width = static_cast<std::size_t>(2 * half_width + 1);
  if (step < 0 || half_width < 0 || r_.size() != width || l_.size() != width) {
    throw Error(ErrorKind::Config, "WalkState: rows must span [-half_width, half_width] at a nonnegative step");
  }
}

WalkState WalkState::from_rows(int step, const LatticeRow& r, const LatticeRow& l) {
  int h = 0;
  for (const LatticeRow* row : {&r, &l}) {
    if (row->empty()) continue;
    h = std::max({h, std::abs(row->first_site()), std::abs(row->last_site())});
  }
  LatticeRow rw = r.widened(-h, h);
  LatticeRow lw = l.widened(-h, h);
  return WalkState(step, h, {rw.values().begin(), rw.values().end()}, {lw.values().begin(), lw.values().end()});
}

double WalkState::norm() const noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < r_.size(); ++i) s += std::norm(r_[i]) + std::norm(l_[i]);
  return s;
}

double ProbabilityDistribution::total() const noexcept {
  double s = 0.0;
  for (double p : p_total) s += p;
  return s;
}

WalkState make_initial(Amplitude r0, Amplitude l0) {
  const double n = std::norm(r0) + std::norm(l0);
  if (!(std::abs(n - 1.0) <= kNormTolerance)) {
    throw Error(ErrorKind::NotNormalized,
                "initial spinor must satisfy |r0|^2 + |l0|^2 = 1, got " + std::to_string(n));
  }
  return WalkState(0, 0, {r0}, {l0});
}

namespace {

// One coupled update from a window of half-width h (centered at `src_mid`)
// into a window of half-width h + 1 (centered at `dst_mid`). Both buffers are
// laid out with site m at index mid + m.
void advance(const Amplitude* r, const Amplitude* l, int h, Amplitude* rn, Amplitude* ln, const CoinParameter& coin) {
  const double s = coin.sqrt_rho();
  const double c = coin.sqrt_one_minus_rho();
  auto src = [h](const Amplitude* row, int m) { return (m < -h || m > h) ? Amplitude{} : row[m]; };
  for (int m = -(h + 1); m <= h + 1; ++m) {
    const Amplitude from_left = src(r, m - 1);
    const Amplitude from_right = src(l, m + 1);
    rn[m] = s * from_left + c * from_right;
    ln[m] = c * from_left - s * from_right;
  }
}

}  // namespace

WalkState step(const WalkState& state, const CoinParameter& coin) { return evolve(state, coin, 1); }

WalkState evolve(const WalkState& state, const CoinParameter& coin, int steps) {
  if (steps < 0) throw Error(ErrorKind::Config, "evolve: steps must be nonnegative");
  if (steps == 0) return state;

  const int h0 = state.half_width();
  const int hmax = h0 + steps;
  const auto width = static_cast<std::size_t>(2 * hmax + 1);
  std::vector<Amplitude> r(width), l(width), rn(width), ln(width);
  std::copy(state.r_values().begin(), state.r_values().end(), r.begin() + (hmax - h0));
  std::copy(state.l_values().begin(), state.l_values().end(), l.begin() + (hmax - h0));

  for (int h = h0; h < hmax; ++h) {
    advance(r.data() + hmax, l.data() + hmax, h, rn.data() + hmax, ln.data() + hmax, coin);
    std::swap(r, rn);
    std::swap(l, ln);
  }
  return WalkState(state.step() + steps, hmax, std::move(r), std::move(l));
}

ProbabilityDistribution probability(const WalkState& state) {
  ProbabilityDistribution d;
  const auto width = state.r_values().size();
  d.sites.reserve(width);
  d.p_total.reserve(width);
  d.p_right.reserve(width);
  d.p_left.reserve(width);
  for (int m = state.first_site(); m <= state.last_site(); ++m) {
    const double pr = std::norm(state.r(m));
    const double pl = std::norm(state.l(m));
    d.sites.push_back(m);
    d.p_right.push_back(pr);
    d.p_left.push_back(pl);
    d.p_total.push_back(pr + pl);
  }
  return d;
}

double mean_displacement(const ProbabilityDistribution& dist) {
  double weight = 0.0;
  double moment = 0.0;
  for (std::size_t i = 0; i < dist.sites.size(); ++i) {
    weight += dist.p_total[i];
    moment += dist.sites[i] * dist.p_total[i];
  }
  if (!(weight > 0.0)) throw Error(ErrorKind::EmptyDistribution, "mean_displacement: distribution has zero weight");
  return moment / weight;
}

}  // namespace qwalk
