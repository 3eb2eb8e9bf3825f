#include "qwalk/run.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "qwalk/conventions.hpp"
#include "qwalk/error.hpp"
#include "qwalk/recurrence.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxGridPoints = 10'000'000;
constexpr int kDispersionPoints = 1000;

double parse_real(std::string_view text, std::string_view what) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw Error(ErrorKind::Config, "cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

// Imaginary part text without the trailing 'i': "", "+", "-" mean 1, 1, -1.
double parse_imaginary(std::string_view text, std::string_view whole) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  return parse_real(text, "complex number '" + std::string(whole) + "'");
}

ResultTable distribution_table(const ProbabilityDistribution& d) {
  ResultTable t({{"m", ColumnKind::Integer}, {"P", ColumnKind::Real}, {"P_R", ColumnKind::Real},
                 {"P_L", ColumnKind::Real}});
  for (std::size_t i = 0; i < d.sites.size(); ++i) {
    t.add_row({static_cast<double>(d.sites[i]), d.p_total[i], d.p_right[i], d.p_left[i]});
  }
  return t;
}

void common_metadata(ResultTable& t, const RunConfig& c) {
  t.set_metadata("mode", to_string(c.mode));
  t.set_metadata("version", kSolverVersion);
  if (c.rho) t.set_metadata("rho", format_real(*c.rho));
}

void spinor_metadata(ResultTable& t, const RunConfig& c) {
  t.set_metadata("r0", format_complex(c.r0));
  t.set_metadata("l0", format_complex(c.l0));
}

WalkState spectral_state(const WalkState& initial, const CoinParameter& coin, int steps, int nodes,
                         std::vector<std::string>& warnings) {
  if (coin.rho() == 1.0) {
    warnings.emplace_back("rho = 1 is singular for the spectral solver; using direct iteration");
    return evolve(initial, coin, steps);
  }
  return reconstruct_state(exact_fields(initial, coin, {}, nodes), steps);
}

RunResult run_walk(const RunConfig& c, bool decoupled) {
  const CoinParameter coin(*c.rho);
  const WalkState initial = make_initial(c.r0, c.l0);
  const WalkState final_state = decoupled ? decoupled_walk(initial, coin, *c.steps) : evolve(initial, coin, *c.steps);
  RunResult r{distribution_table(probability(final_state)), {}, true};
  common_metadata(r.table, c);
  r.table.set_metadata("steps", std::to_string(*c.steps));
  spinor_metadata(r.table, c);
  return r;
}

RunResult run_spectral(const RunConfig& c) {
  const CoinParameter coin(*c.rho);
  const WalkState initial = make_initial(c.r0, c.l0);
  std::vector<std::string> warnings;
  const WalkState final_state = spectral_state(initial, coin, *c.steps, c.nodes, warnings);
  RunResult r{distribution_table(probability(final_state)), std::move(warnings), true};
  common_metadata(r.table, c);
  r.table.set_metadata("steps", std::to_string(*c.steps));
  spinor_metadata(r.table, c);
  r.table.set_metadata("nodes", std::to_string(c.nodes));
  return r;
}

double longwave_tau(const RunConfig& c) { return c.tau ? *c.tau : static_cast<double>(*c.steps); }

RunResult run_longwave(const RunConfig& c) {
  const CoinParameter coin(*c.rho);
  const CutoffSpec cutoff(c.w);
  const double tau = longwave_tau(c);
  const Parity parity = c.parity.value_or(default_parity(tau));
  const GridSpec grid = c.grid.value_or(GridSpec{-250.0, 250.0, 0.5});
  const ContinuumFields fields(make_initial(c.r0, c.l0), coin, cutoff, c.verify);
  const ContinuumDistribution d = continuum_probability(fields, grid.points(), tau, parity, c.normalize);

  ResultTable t({{"xi", ColumnKind::Real}, {"P", ColumnKind::Real}, {"P_R", ColumnKind::Real},
                 {"P_L", ColumnKind::Real}});
  for (std::size_t i = 0; i < d.xi.size(); ++i) t.add_row({d.xi[i], d.p_total[i], d.p_right[i], d.p_left[i]});
  common_metadata(t, c);
  t.set_metadata("tau", format_real(tau));
  t.set_metadata("parity", parity == Parity::Even ? "even" : "odd");
  spinor_metadata(t, c);
  t.set_metadata("w", format_real(c.w));
  t.set_metadata("grid", grid.to_string());
  t.set_metadata("normalized", c.normalize ? "true" : "false");
  t.set_metadata("units", c.normalize ? "grid-normalized" : "arbitrary");
  return {std::move(t), {}, true};
}

RunResult run_dispersion(const RunConfig& c) {
  const double rho = *c.rho;
  static_cast<void>(CoinParameter(rho));
  std::vector<double> ks;
  if (c.grid) {
    ks = c.grid->points();
  } else {
    for (int j = 0; j < kDispersionPoints; ++j) ks.push_back(-kPi + 2.0 * kPi * (j + 1) / kDispersionPoints);
  }
  ResultTable t({{"k", ColumnKind::Real}, {"omega0", ColumnKind::Real}, {"omega1", ColumnKind::Real},
                 {"residual", ColumnKind::Real}});
  for (double k : ks) {
    const double w0 = omega0(k, rho);
    const double w1 = omega1(k, rho);
    t.add_row({k, w0, w1, std::max(dispersion_residual(k, w0, rho), dispersion_residual(k, w1, rho))});
  }
  common_metadata(t, c);
  t.set_metadata("grid", c.grid ? c.grid->to_string() : "uniform 1000 points on (-pi, pi]");
  return {std::move(t), {}, true};
}

// Descriptive comparison with the long-wavelength approximation at tau = n,
// sampled on the sites where the exact walk can be nonzero.
void longwave_statistics(ResultTable& t, const RunConfig& c, const ProbabilityDistribution& exact) {
  const double rho = *c.rho;
  const int n = *c.steps;
  if (rho <= 0.0 || rho >= 1.0 || n == 0) {
    t.set_metadata("longwave", "not applicable for this rho/steps");
    return;
  }
  std::vector<double> sites;
  for (int m : exact.sites) {
    if ((m + n) % 2 == 0) sites.push_back(m);
  }
  const ContinuumFields fields(make_initial(c.r0, c.l0), CoinParameter(rho), CutoffSpec(c.w));
  const ContinuumDistribution lw = continuum_probability(fields, sites, n, default_parity(n), true);

  double tv = 0.0;
  std::size_t lw_peak = 0;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const int m = static_cast<int>(sites[i]);
    tv += std::abs(lw.p_total[i] - exact.p_total[static_cast<std::size_t>(m + n)]);
    if (lw.p_total[i] > lw.p_total[lw_peak]) lw_peak = i;
  }
  const auto exact_peak = std::max_element(exact.p_total.begin(), exact.p_total.end()) - exact.p_total.begin();
  t.set_metadata("longwave_w", format_real(c.w));
  t.set_metadata("longwave_total_variation", format_real(0.5 * tv));
  t.set_metadata("longwave_peak_site", std::to_string(static_cast<int>(sites[lw_peak])));
  t.set_metadata("exact_peak_site", std::to_string(exact.sites[static_cast<std::size_t>(exact_peak)]));
}

RunResult run_compare(const RunConfig& c) {
  const CoinParameter coin(*c.rho);
  const int n = *c.steps;
  const WalkState initial = make_initial(c.r0, c.l0);
  std::vector<std::string> warnings;
  const ProbabilityDistribution it = probability(evolve(initial, coin, n));
  const ProbabilityDistribution dc = probability(decoupled_walk(initial, coin, n));
  const ProbabilityDistribution sp = probability(spectral_state(initial, coin, n, c.nodes, warnings));

  ResultTable t({{"m", ColumnKind::Integer}, {"P_iter", ColumnKind::Real}, {"P_decoupled", ColumnKind::Real},
                 {"P_spectral", ColumnKind::Real}});
  double d_dec = 0.0;
  double d_spec = 0.0;
  for (std::size_t i = 0; i < it.sites.size(); ++i) {
    t.add_row({static_cast<double>(it.sites[i]), it.p_total[i], dc.p_total[i], sp.p_total[i]});
    d_dec = std::max(d_dec, std::abs(it.p_total[i] - dc.p_total[i]));
    d_spec = std::max(d_spec, std::abs(it.p_total[i] - sp.p_total[i]));
  }
  common_metadata(t, c);
  t.set_metadata("steps", std::to_string(n));
  spinor_metadata(t, c);
  t.set_metadata("nodes", std::to_string(c.nodes));
  t.set_metadata("max_diff_decoupled", format_real(d_dec));
  t.set_metadata("max_diff_spectral", format_real(d_spec));
  t.set_metadata("tolerance", format_real(kCompareTolerance));
  longwave_statistics(t, c, it);
  const bool ok = d_dec <= kCompareTolerance && d_spec <= kCompareTolerance;
  return {std::move(t), std::move(warnings), ok};
}

RunResult run_nv(const RunConfig& c) {
  const int n = *c.steps;
  const NVState s = nv_evolve(nv_initial(), n);
  ResultTable t({{"m", ColumnKind::Integer},
                 {"Rhat_re", ColumnKind::Real},
                 {"Rhat_im", ColumnKind::Real},
                 {"Lhat_re", ColumnKind::Real},
                 {"Lhat_im", ColumnKind::Real},
                 {"Rhat_closed_re", ColumnKind::Real},
                 {"Rhat_closed_im", ColumnKind::Real},
                 {"Lhat_closed_re", ColumnKind::Real},
                 {"Lhat_closed_im", ColumnKind::Real}});
  double diff = 0.0;
  for (int m = -n - 1; m <= n + 1; ++m) {
    const Amplitude r = s.r_hat.at(m);
    const Amplitude l = s.l_hat.at(m);
    const auto [rc, lc] = nv_closed_form(m, n, c.nodes);
    diff = std::max({diff, std::abs(r - rc), std::abs(l - lc)});
    t.add_row({static_cast<double>(m), r.real(), r.imag(), l.real(), l.imag(), rc.real(), rc.imag(), lc.real(),
               lc.imag()});
  }
  t.set_metadata("mode", to_string(c.mode));
  t.set_metadata("version", kSolverVersion);
  t.set_metadata("rho", "0.5");
  t.set_metadata("steps", std::to_string(n));
  t.set_metadata("nodes", std::to_string(c.nodes));
  t.set_metadata("max_diff_closed_form", format_real(diff));
  t.set_metadata("tolerance", format_real(kCompareTolerance));
  return {std::move(t), {}, diff <= kCompareTolerance};
}

}  // namespace

Mode parse_mode(std::string_view text) {
  for (Mode m : {Mode::Walk, Mode::Decoupled, Mode::Spectral, Mode::Longwave, Mode::Dispersion, Mode::Compare,
                 Mode::NV}) {
    if (text == to_string(m)) return m;
  }
  throw Error(ErrorKind::Config, "unknown mode '" + std::string(text) + "'");
}

const char* to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::Walk: return "walk";
    case Mode::Decoupled: return "decoupled";
    case Mode::Spectral: return "spectral";
    case Mode::Longwave: return "longwave";
    case Mode::Dispersion: return "dispersion";
    case Mode::Compare: return "compare";
    case Mode::NV: return "nv";
  }
  return "?";
}

Amplitude parse_complex(std::string_view text) {
  const std::string_view whole = text;
  if (text.empty()) throw Error(ErrorKind::Config, "empty complex number");
  if (text.back() != 'i') return {parse_real(text, "complex number"), 0.0};
  text.remove_suffix(1);
  // Split at the last sign that is neither leading nor part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = text.size(); i-- > 1;) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_imaginary(text, whole)};
  return {parse_real(text.substr(0, split), "complex number '" + std::string(whole) + "'"),
          parse_imaginary(text.substr(split), whole)};
}

std::string format_complex(Amplitude value) {
  const std::string im = format_real(value.imag());
  return format_real(value.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

GridSpec GridSpec::parse(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
    throw Error(ErrorKind::Config, "grid must have the form start:stop:step, got '" + std::string(text) + "'");
  }
  GridSpec g{parse_real(text.substr(0, first), "grid start"),
             parse_real(text.substr(first + 1, second - first - 1), "grid stop"),
             parse_real(text.substr(second + 1), "grid step")};
  if (!(g.step > 0.0)) throw Error(ErrorKind::Config, "grid step must be positive");
  if (g.stop < g.start) throw Error(ErrorKind::Config, "grid stop must not precede start");
  if ((g.stop - g.start) / g.step >= static_cast<double>(kMaxGridPoints)) {
    throw Error(ErrorKind::Config, "grid has too many points");
  }
  return g;
}

std::vector<double> GridSpec::points() const {
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> pts(count);
  for (std::size_t i = 0; i < count; ++i) pts[i] = start + static_cast<double>(i) * step;
  return pts;
}

std::string GridSpec::to_string() const {
  return format_real(start) + ":" + format_real(stop) + ":" + format_real(step);
}

void RunConfig::validate() const {
  auto need = [&](bool present, const char* what) {
    if (!present) throw Error(ErrorKind::Config, std::string(to_string(mode)) + " mode requires " + what);
  };
  if (mode != Mode::NV) need(rho.has_value(), "--rho");
  if (rho && !(*rho >= 0.0 && *rho <= 1.0)) throw Error(ErrorKind::Config, "--rho must lie in [0, 1]");
  switch (mode) {
    case Mode::Walk:
    case Mode::Decoupled:
    case Mode::Spectral:
    case Mode::Compare:
    case Mode::NV: need(steps.has_value(), "--steps"); break;
    case Mode::Longwave: need(steps.has_value() || tau.has_value(), "--tau or --steps"); break;
    case Mode::Dispersion: break;
  }
  if (steps && *steps < 0) throw Error(ErrorKind::Config, "--steps must be nonnegative");
  if (tau && !(*tau >= 0.0 && std::isfinite(*tau))) throw Error(ErrorKind::Config, "--tau must be nonnegative");
  if (!(w > 0.0) || !std::isfinite(w)) throw Error(ErrorKind::Config, "--w must be positive");
  if (nodes < kMinimumNodes) throw Error(ErrorKind::Config, "--nodes must be at least 512");
  if (mode == Mode::NV && rho && *rho != 0.5) {
    throw Error(ErrorKind::UnsupportedCoin, "nv mode is defined for the Hadamard coin (rho = 0.5) only");
  }
  if (out.empty()) throw Error(ErrorKind::Config, "--out must not be empty");
}

RunResult run(const RunConfig& config) {
  config.validate();
  switch (config.mode) {
    case Mode::Walk: return run_walk(config, false);
    case Mode::Decoupled: return run_walk(config, true);
    case Mode::Spectral: return run_spectral(config);
    case Mode::Longwave: return run_longwave(config);
    case Mode::Dispersion: return run_dispersion(config);
    case Mode::Compare: return run_compare(config);
    case Mode::NV: return run_nv(config);
  }
  throw Error(ErrorKind::Config, "unhandled mode");
}

}  // namespace qwalk
