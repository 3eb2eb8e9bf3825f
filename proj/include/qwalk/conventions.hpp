#pragma once

#include <utility>

#include "qwalk/lattice.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

// Amplitudes in the reflected (index-shifted) labeling:
//   Rhat_{m,n} = L_{-m+1,n},  Lhat_{m,n} = R_{-m-1,n}.
struct NVState {
  int step = 0;
  LatticeRow r_hat;
  LatticeRow l_hat;

  double norm() const noexcept { return r_hat.norm_squared() + l_hat.norm_squared(); }
};

NVState to_nv(const WalkState& state);

// Exact inverse of to_nv: L_{m,n} = Rhat_{-m+1,n}, R_{m,n} = Lhat_{-m-1,n}.
WalkState from_nv(const NVState& state);

// Lhat_{m,0} = delta_{m,0}, Rhat_{m,0} = 0; in the native labeling R_{m,0} = delta_{m,-1}.
NVState nv_initial();

// One Hadamard step in the reflected labeling:
//   Lhat_{m,n} = (Lhat_{m+1,n-1} + Rhat_{m+1,n-1}) / sqrt(2)
//   Rhat_{m,n} = (Lhat_{m-1,n-1} - Rhat_{m-1,n-1}) / sqrt(2)
NVState nv_step(const NVState& state);

NVState nv_evolve(NVState state, int steps);

// (Rhat_{m,n}, Lhat_{m,n}) for the nv_initial() walk from
//   Rhat = [1 + (-1)^{n+m}] (X/4pi) int dk e^{ik(1-m)} e^{-i w0 n} / sqrt(1 + cos^2 k)
//   Lhat = [1 + (-1)^{n+m}] (X/4pi) int dk (1 + cos k / sqrt(1 + cos^2 k)) e^{-ikm} e^{-i w0 n}
// with the trapezoid rule on `nodes` intervals (X = T = 1, rho = 1/2).
// Both values are exactly zero when n + m is odd. Throws Config for nodes < 512
// or n < 0 and NonConvergent if halving the node count moves either value by
// more than 1e-8.
std::pair<Amplitude, Amplitude> nv_closed_form(int m, int n, int nodes = 4096);

}  // namespace qwalk
