#pragma once

#include <algorithm>
#include <cmath>
#include <array>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "qwalk/lattice.hpp"
#include "qwalk/walk.hpp"

namespace qwalk::testing {

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

// R = 1/sqrt2, L = i/sqrt2 at site 0: the spinor whose distribution is left-right symmetric.
inline WalkState balanced_initial() { return make_initial({kInvSqrt2, 0.0}, {0.0, kInvSqrt2}); }

// Normalized spinor with uniformly random phase and mixing angle.
inline std::array<Amplitude, 2> random_spinor(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double theta = 0.5 * std::numbers::pi * u(rng);
  return {std::polar(std::cos(theta), 2.0 * std::numbers::pi * u(rng)), std::polar(std::sin(theta), 2.0 * std::numbers::pi * u(rng))};
}

inline WalkState random_initial(std::mt19937_64& rng) {
  const auto s = random_spinor(rng);
  return make_initial(s[0], s[1]);
}

// Normalized state with complex Gaussian amplitudes on [-half_width, half_width].
inline WalkState random_state(std::mt19937_64& rng, int half_width, int step = 0) {
  std::normal_distribution<double> g;
  const auto n = static_cast<std::size_t>(2 * half_width + 1);
  std::vector<Amplitude> r(n), l(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = {g(rng), g(rng)};
    l[i] = {g(rng), g(rng)};
    total += std::norm(r[i]) + std::norm(l[i]);
  }
  const double s = 1.0 / std::sqrt(total);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] *= s;
    l[i] *= s;
  }
  return WalkState(step, half_width, std::move(r), std::move(l));
}

inline double max_abs_diff(const WalkState& a, const WalkState& b) {
  const int h = std::max(a.half_width(), b.half_width());
  double d = 0.0;
  for (int m = -h; m <= h; ++m) d = std::max({d, std::abs(a.r(m) - b.r(m)), std::abs(a.l(m) - b.l(m))});
  return d;
}

}  // namespace qwalk::testing
