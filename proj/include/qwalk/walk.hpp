#pragma once

#include <array>
#include <vector>

#include "qwalk/lattice.hpp"

namespace qwalk {

// Unitary coin [[sqrt(rho), sqrt(1-rho)], [sqrt(1-rho), -sqrt(rho)]].
// rho = 1/2 is the Hadamard coin.
class CoinParameter {
 public:
  explicit CoinParameter(double rho);

  static CoinParameter hadamard() { return CoinParameter(0.5); }

  double rho() const noexcept { return rho_; }
  double sqrt_rho() const noexcept { return sqrt_rho_; }
  double sqrt_one_minus_rho() const noexcept { return sqrt_cmp_; }

  std::array<std::array<double, 2>, 2> matrix() const noexcept;

  // Coin acting on a single (R, L) spinor.
  std::array<Amplitude, 2> apply(const std::array<Amplitude, 2>& spinor) const noexcept;

 private:
  double rho_;
  double sqrt_rho_;
  double sqrt_cmp_;
};

// Amplitudes R_{m,n}, L_{m,n} at step n over the symmetric window
// m in [-half_width, half_width]. Index i holds site m = i - half_width.
// A walk started at a single site has half_width == step.
class WalkState {
 public:
  WalkState(int step, int half_width, std::vector<Amplitude> r, std::vector<Amplitude> l);

  // Arbitrary rows, padded to the smallest symmetric window containing both.
  static WalkState from_rows(int step, const LatticeRow& r, const LatticeRow& l);

  int step() const noexcept { return step_; }
  int half_width() const noexcept { return half_width_; }
  int first_site() const noexcept { return -half_width_; }
  int last_site() const noexcept { return half_width_; }

  Amplitude r(int m) const noexcept { return in_window(m) ? r_[index(m)] : Amplitude{}; }
  Amplitude l(int m) const noexcept { return in_window(m) ? l_[index(m)] : Amplitude{}; }

  const std::vector<Amplitude>& r_values() const noexcept { return r_; }
  const std::vector<Amplitude>& l_values() const noexcept { return l_; }

  LatticeRow r_row() const { return {-half_width_, r_}; }
  LatticeRow l_row() const { return {-half_width_, l_}; }

  double norm() const noexcept;

  friend bool operator==(const WalkState&, const WalkState&) = default;

 private:
  bool in_window(int m) const noexcept { return m >= -half_width_ && m <= half_width_; }
  std::size_t index(int m) const noexcept { return static_cast<std::size_t>(m + half_width_); }

  int step_;
  int half_width_;
  std::vector<Amplitude> r_;
  std::vector<Amplitude> l_;
};

struct ProbabilityDistribution {
  std::vector<int> sites;
  std::vector<double> p_total;
  std::vector<double> p_right;
  std::vector<double> p_left;

  double total() const noexcept;
};

inline constexpr double kNormTolerance = 1e-12;

// Walker at site 0 with coin spinor (r0, l0). Throws NotNormalized unless
// |r0|^2 + |l0|^2 = 1 within kNormTolerance.
WalkState make_initial(Amplitude r0, Amplitude l0);

// R_{m,n+1} = sqrt(rho) R_{m-1,n} + sqrt(1-rho) L_{m+1,n}
// L_{m,n+1} = sqrt(1-rho) R_{m-1,n} - sqrt(rho) L_{m+1,n}
WalkState step(const WalkState& state, const CoinParameter& coin);

// `steps` applications of step(); buffers are sized once for the final window.
WalkState evolve(const WalkState& state, const CoinParameter& coin, int steps);

ProbabilityDistribution probability(const WalkState& state);

// Sum m P_m / Sum P_m. Throws EmptyDistribution when the weight is zero.
double mean_displacement(const ProbabilityDistribution& dist);

}  // namespace qwalk
