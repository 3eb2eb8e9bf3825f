#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "qwalk/lattice.hpp"
#include "qwalk/quadrature.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

// Lattice spacing X and step duration T. Both default to 1.
struct LatticeScales {
  double x = 1.0;
  double t = 1.0;

  void validate() const;
};

// Principal branch of sin(w T) = sqrt(rho) sin(k X): w0(0) = 0, |w0| <= pi/(2T).
double omega0(double k, double rho, LatticeScales scales = {});

// Second branch -w0(k) + pi/T for k > 0, -w0(k) - pi/T for k < 0 and +pi/T at
// k = 0, with k reduced to (-pi/X, pi/X] first. A value of exactly -pi/T
// (rho = 0, k < 0) is wrapped to +pi/T so the result stays in (-pi/T, pi/T].
double omega1(double k, double rho, LatticeScales scales = {});

// |sin(w T) - sqrt(rho) sin(k X)|.
double dispersion_residual(double k, double omega, double rho, LatticeScales scales = {});

class DispersionBranch {
 public:
  DispersionBranch(double rho, int branch, LatticeScales scales = {});

  double rho() const noexcept { return rho_; }
  int branch() const noexcept { return branch_; }
  const LatticeScales& scales() const noexcept { return scales_; }

  double operator()(double k) const;
  double residual(double k) const { return dispersion_residual(k, (*this)(k), rho_, scales_); }

 private:
  double rho_;
  int branch_;
  LatticeScales scales_;
};

// a^{+/-}(k) = (X/4pi) sum_m [exp(+/- i w0 T) a_{m,0} +/- a_{m,1}] exp(-i k m X)
//              / sqrt(1 - rho sin^2 kX)
// Periodic in k with period 2pi/X.
class FieldSpectrum {
 public:
  FieldSpectrum(Channel channel, Sign sign, LatticeRow row0, LatticeRow row1, double rho, LatticeScales scales);

  Channel channel() const noexcept { return channel_; }
  Sign sign() const noexcept { return sign_; }
  double rho() const noexcept { return rho_; }
  const LatticeScales& scales() const noexcept { return scales_; }

  Amplitude operator()(double k) const;

  // a^{+/-}(x, t) = int dk a^{+/-}(k) exp(ikx) exp(-/+ i w0(k) t), trapezoid on `intervals`.
  Amplitude field(double x, double t, int intervals = 4096) const;

 private:
  Channel channel_;
  Sign sign_;
  LatticeRow row0_;
  LatticeRow row1_;
  double rho_;
  double sqrt_rho_;
  LatticeScales scales_;
};

// Throws DegenerateDenominator for rho = 1.
FieldSpectrum spectrum_from_initial(const LatticeRow& row0, const LatticeRow& row1, Sign sign, double rho,
                                    LatticeScales scales = {}, Channel channel = Channel::R);

inline constexpr int kDefaultNodes = 4096;
inline constexpr int kMinimumNodes = 512;

// g(x; t) = (X/4pi) int_{-pi/X}^{pi/X} dk exp(ikx) exp(-i w0(k) t) / sqrt(1 - rho sin^2 kX)
// evaluated with the trapezoid rule on `nodes` intervals. Immutable after
// construction; copies share the node tables.
class GreenFunctionSampler {
 public:
  GreenFunctionSampler(double rho, LatticeScales scales = {}, int nodes = kDefaultNodes);

  double rho() const noexcept { return rho_; }
  const LatticeScales& scales() const noexcept { return scales_; }
  int nodes() const noexcept { return nodes_; }

  Amplitude operator()(double x, double t) const;

  struct Tables {
    std::vector<double> k;
    std::vector<double> omega;
    std::vector<double> coeff;  // weight * X/(4pi) / sqrt(1 - rho sin^2 kX)
  };
  const Tables& tables() const noexcept { return *tables_; }

 private:
  double rho_;
  LatticeScales scales_;
  int nodes_;
  std::shared_ptr<const Tables> tables_;
};

Amplitude green(double x, double t, const GreenFunctionSampler& sampler);

// g(jX; sT) for j in [-max_site, max_site], s in [-1, max_step], computed in
// one pass over the quadrature nodes.
class GreenLatticeTable {
 public:
  GreenLatticeTable(const GreenFunctionSampler& sampler, int max_site, int max_step);

  int max_site() const noexcept { return max_site_; }
  int max_step() const noexcept { return max_step_; }
  bool covers(int site, int step) const noexcept {
    return site >= -max_site_ && site <= max_site_ && step >= -1 && step <= max_step_;
  }
  Amplitude at(int site, int step) const noexcept {
    return values_[static_cast<std::size_t>(step + 1) * stride_ + static_cast<std::size_t>(site + max_site_)];
  }

 private:
  int max_site_;
  int max_step_;
  std::size_t stride_;
  std::vector<Amplitude> values_;
};

// Green-function sums for R+, R-, L+, L- built from an n = 0 state:
//   R+/-(x,t) = sum_m g(+/-(x-mX); t-T) R_{m,0} +/- sqrt(rho) sum_m g(+/-(x-mX); t) R_{m-1,0}
//               +/- sqrt(1-rho) sum_m g(+/-(x-mX); t) L_{m+1,0}
//   L+/-(x,t) = sum_m g(+/-(x-mX); t-T) L_{m,0} -/+ sqrt(rho) sum_m g(+/-(x-mX); t) L_{m+1,0}
//               +/- sqrt(1-rho) sum_m g(+/-(x-mX); t) R_{m-1,0}
class ExactFields {
 public:
  ExactFields(const WalkState& initial, const CoinParameter& coin, LatticeScales scales = {},
              int nodes = kDefaultNodes);

  // Copy whose lattice-point evaluations up to `max_step` read from a
  // precomputed GreenLatticeTable.
  ExactFields with_lattice_cache(int max_step) const;

  Amplitude field(Channel channel, Sign sign, double x, double t) const;
  Amplitude r_plus(double x, double t) const { return field(Channel::R, Sign::Plus, x, t); }
  Amplitude r_minus(double x, double t) const { return field(Channel::R, Sign::Minus, x, t); }
  Amplitude l_plus(double x, double t) const { return field(Channel::L, Sign::Plus, x, t); }
  Amplitude l_minus(double x, double t) const { return field(Channel::L, Sign::Minus, x, t); }

  const GreenFunctionSampler& sampler() const noexcept { return sampler_; }
  const LatticeScales& scales() const noexcept { return scales_; }
  const WalkState& initial() const noexcept { return initial_; }

 private:
  Amplitude g(double x, double t) const;

  WalkState initial_;
  CoinParameter coin_;
  LatticeScales scales_;
  GreenFunctionSampler sampler_;
  std::shared_ptr<const GreenLatticeTable> lattice_;
};

ExactFields exact_fields(const WalkState& initial, const CoinParameter& coin, LatticeScales scales = {},
                         int nodes = kDefaultNodes);

// a_{m,n} = a+(mX, nT) + (-1)^n a-(mX, nT) for a = R, L.
std::pair<Amplitude, Amplitude> reconstruct(const ExactFields& fields, int m, int n);

// Whole state at step n over the window of a direct iteration.
WalkState reconstruct_state(const ExactFields& fields, int n);

}  // namespace qwalk
