#include "qwalk/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/error.hpp"
#include "qwalk/parallel.hpp"

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;

void require_spectral_rho(double rho, const char* where) {
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw Error(ErrorKind::Config, std::string(where) + ": rho must lie in [0, 1]");
  }
  if (rho == 1.0) {
    throw Error(ErrorKind::DegenerateDenominator,
                std::string(where) + ": sqrt(1 - rho sin^2 kX) vanishes at kX = +/-pi/2 when rho = 1");
  }
}

bool is_integral(double v) noexcept { return std::isfinite(v) && v == std::nearbyint(v); }

}  // namespace

void LatticeScales::validate() const {
  if (!(x > 0.0) || !(t > 0.0) || !std::isfinite(x) || !std::isfinite(t)) {
    throw Error(ErrorKind::Config, "lattice scales X and T must be positive and finite");
  }
}

double omega0(double k, double rho, LatticeScales scales) {
  return std::asin(std::sqrt(rho) * std::sin(k * scales.x)) / scales.t;
}

double omega1(double k, double rho, LatticeScales scales) {
  const double period = 2.0 * kPi / scales.x;
  double kr = std::remainder(k, period);
  if (kr <= -kPi / scales.x) kr += period;

  const double half = kPi / scales.t;
  if (kr == 0.0) return half;
  const double w0 = omega0(kr, rho, scales);
  double w1 = kr > 0.0 ? -w0 + half : -w0 - half;
  if (w1 <= -half) w1 += 2.0 * half;
  return w1;
}

double dispersion_residual(double k, double omega, double rho, LatticeScales scales) {
  return std::abs(std::sin(omega * scales.t) - std::sqrt(rho) * std::sin(k * scales.x));
}

DispersionBranch::DispersionBranch(double rho, int branch, LatticeScales scales)
    : rho_(rho), branch_(branch), scales_(scales) {
  static_cast<void>(CoinParameter(rho));
  scales.validate();
  if (branch != 0 && branch != 1) throw Error(ErrorKind::Config, "dispersion branch must be 0 or 1");
}

double DispersionBranch::operator()(double k) const {
  return branch_ == 0 ? omega0(k, rho_, scales_) : omega1(k, rho_, scales_);
}

// FieldSpectrum

FieldSpectrum::FieldSpectrum(Channel channel, Sign sign, LatticeRow row0, LatticeRow row1, double rho,
                             LatticeScales scales)
    : channel_(channel),
      sign_(sign),
      row0_(std::move(row0)),
      row1_(std::move(row1)),
      rho_(rho),
      sqrt_rho_(std::sqrt(rho)),
      scales_(scales) {
  require_spectral_rho(rho, "spectrum_from_initial");
  scales.validate();
}

Amplitude FieldSpectrum::operator()(double k) const {
  const double sigma = sign_value(sign_);
  const double skx = std::sin(k * scales_.x);
  const double denom = std::sqrt(1.0 - rho_ * skx * skx);
  const double w0 = std::asin(sqrt_rho_ * skx) / scales_.t;
  const Amplitude phase = std::polar(1.0, sigma * w0 * scales_.t);

  Amplitude sum{};
  if (!row0_.empty()) {
    for (int m = row0_.first_site(); m <= row0_.last_site(); ++m) {
      if (row0_[m] != Amplitude{}) sum += phase * row0_[m] * std::polar(1.0, -k * m * scales_.x);
    }
  }
  if (!row1_.empty()) {
    for (int m = row1_.first_site(); m <= row1_.last_site(); ++m) {
      if (row1_[m] != Amplitude{}) sum += sigma * row1_[m] * std::polar(1.0, -k * m * scales_.x);
    }
  }
  return sum * (scales_.x / (4.0 * kPi) / denom);
}

Amplitude FieldSpectrum::field(double x, double t, int intervals) const {
  const TrapezoidRule rule = TrapezoidRule::brillouin_zone(intervals, kPi / scales_.x);
  const double sigma = sign_value(sign_);
  Amplitude sum{};
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    const double k = rule.nodes[j];
    const double w0 = omega0(k, rho_, scales_);
    sum += rule.weights[j] * (*this)(k) * std::polar(1.0, k * x - sigma * w0 * t);
  }
  return sum;
}

FieldSpectrum spectrum_from_initial(const LatticeRow& row0, const LatticeRow& row1, Sign sign, double rho,
                                    LatticeScales scales, Channel channel) {
  return FieldSpectrum(channel, sign, row0, row1, rho, scales);
}

// Green function

GreenFunctionSampler::GreenFunctionSampler(double rho, LatticeScales scales, int nodes)
    : rho_(rho), scales_(scales), nodes_(nodes) {
  require_spectral_rho(rho, "green");
  scales.validate();
  if (nodes < kMinimumNodes) {
    throw Error(ErrorKind::Config, "green: at least " + std::to_string(kMinimumNodes) + " quadrature nodes required");
  }
  const TrapezoidRule rule = TrapezoidRule::brillouin_zone(nodes, kPi / scales.x);
  auto tables = std::make_shared<Tables>();
  tables->k = rule.nodes;
  tables->omega.resize(rule.nodes.size());
  tables->coeff.resize(rule.nodes.size());
  const double prefactor = scales.x / (4.0 * kPi);
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    const double k = rule.nodes[j];
    const double s = std::sin(k * scales.x);
    tables->omega[j] = omega0(k, rho, scales);
    tables->coeff[j] = rule.weights[j] * prefactor / std::sqrt(1.0 - rho * s * s);
  }
  tables_ = std::move(tables);
}

Amplitude GreenFunctionSampler::operator()(double x, double t) const {
  const Tables& tb = *tables_;
  double re = 0.0;
  double im = 0.0;
  for (std::size_t j = 0; j < tb.k.size(); ++j) {
    const double phase = tb.k[j] * x - tb.omega[j] * t;
    re += tb.coeff[j] * std::cos(phase);
    im += tb.coeff[j] * std::sin(phase);
  }
  return {re, im};
}

Amplitude green(double x, double t, const GreenFunctionSampler& sampler) { return sampler(x, t); }

GreenLatticeTable::GreenLatticeTable(const GreenFunctionSampler& sampler, int max_site, int max_step)
    : max_site_(max_site), max_step_(max_step), stride_(static_cast<std::size_t>(2 * max_site + 1)) {
  if (max_site < 0 || max_step < -1) throw Error(ErrorKind::Config, "GreenLatticeTable: invalid extent");
  const auto& tb = sampler.tables();
  const LatticeScales sc = sampler.scales();
  const std::size_t nodes = tb.k.size();
  const std::size_t steps = static_cast<std::size_t>(max_step + 2);

  // exp(i k_q j X) for every node q and site j.
  std::vector<Amplitude> spatial(nodes * stride_);
  for (std::size_t q = 0; q < nodes; ++q) {
    for (int j = -max_site; j <= max_site; ++j) {
      spatial[q * stride_ + static_cast<std::size_t>(j + max_site)] = std::polar(1.0, tb.k[q] * j * sc.x);
    }
  }

  values_.assign(steps * stride_, Amplitude{});
  parallel_for(steps, [&](std::size_t si) {
    const int s = static_cast<int>(si) - 1;
    Amplitude* row = values_.data() + si * stride_;
    for (std::size_t q = 0; q < nodes; ++q) {
      const Amplitude c = tb.coeff[q] * std::polar(1.0, -tb.omega[q] * s * sc.t);
      const Amplitude* sp = spatial.data() + q * stride_;
      for (std::size_t j = 0; j < stride_; ++j) row[j] += c * sp[j];
    }
  });
}

// Exact fields

ExactFields::ExactFields(const WalkState& initial, const CoinParameter& coin, LatticeScales scales, int nodes)
    : initial_(initial), coin_(coin), scales_(scales), sampler_(coin.rho(), scales, nodes) {
  if (initial.step() != 0) throw Error(ErrorKind::Config, "exact_fields: initial state must be at step 0");
}

ExactFields ExactFields::with_lattice_cache(int max_step) const {
  ExactFields out = *this;
  const int max_site = 2 * initial_.half_width() + max_step + 1;
  out.lattice_ = std::make_shared<const GreenLatticeTable>(sampler_, max_site, max_step);
  return out;
}

Amplitude ExactFields::g(double x, double t) const {
  if (lattice_) {
    const double j = x / scales_.x;
    const double s = t / scales_.t;
    if (is_integral(j) && is_integral(s)) {
      const int ji = static_cast<int>(j);
      const int si = static_cast<int>(s);
      if (lattice_->covers(ji, si)) return lattice_->at(ji, si);
    }
  }
  return sampler_(x, t);
}

Amplitude ExactFields::field(Channel channel, Sign sign, double x, double t) const {
  const double sigma = sign_value(sign);
  const double s = coin_.sqrt_rho();
  const double c = coin_.sqrt_one_minus_rho();
  const double X = scales_.x;
  const double T = scales_.t;

  Amplitude sum{};
  for (int j = initial_.first_site(); j <= initial_.last_site(); ++j) {
    const Amplitude r = initial_.r(j);
    const Amplitude l = initial_.l(j);
    if (channel == Channel::R) {
      if (r != Amplitude{}) {
        sum += g(sigma * (x - j * X), t - T) * r;
        sum += sigma * s * g(sigma * (x - (j + 1) * X), t) * r;
      }
      if (l != Amplitude{}) sum += sigma * c * g(sigma * (x - (j - 1) * X), t) * l;
    } else {
      if (l != Amplitude{}) {
        sum += g(sigma * (x - j * X), t - T) * l;
        sum -= sigma * s * g(sigma * (x - (j - 1) * X), t) * l;
      }
      if (r != Amplitude{}) sum += sigma * c * g(sigma * (x - (j + 1) * X), t) * r;
    }
  }
  return sum;
}

ExactFields exact_fields(const WalkState& initial, const CoinParameter& coin, LatticeScales scales, int nodes) {
  return ExactFields(initial, coin, scales, nodes);
}

std::pair<Amplitude, Amplitude> reconstruct(const ExactFields& fields, int m, int n) {
  if (n < 0) throw Error(ErrorKind::Config, "reconstruct: step must be nonnegative");
  const double x = m * fields.scales().x;
  const double t = n * fields.scales().t;
  const double alt = (n % 2 == 0) ? 1.0 : -1.0;
  return {fields.r_plus(x, t) + alt * fields.r_minus(x, t), fields.l_plus(x, t) + alt * fields.l_minus(x, t)};
}

WalkState reconstruct_state(const ExactFields& fields, int n) {
  if (n < 0) throw Error(ErrorKind::Config, "reconstruct_state: step must be nonnegative");
  const ExactFields cached = fields.with_lattice_cache(n);
  const int h = fields.initial().half_width() + n;
  const auto width = static_cast<std::size_t>(2 * h + 1);
  std::vector<Amplitude> r(width), l(width);
  parallel_for(width, [&](std::size_t i) {
    const auto [rv, lv] = reconstruct(cached, static_cast<int>(i) - h, n);
    r[i] = rv;
    l[i] = lv;
  });
  return WalkState(n, h, std::move(r), std::move(l));
}

}  // namespace qwalk
