#pragma once

#include <utility>
#include <vector>

#include "qwalk/lattice.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

// Rolling two-row window (a_{.,n-1}, a_{.,n}) of one coin channel evolving
// under the three-term recurrence
//   a_{m,n+1} = a_{m,n-1} + sqrt(rho) (a_{m-1,n} - a_{m+1,n}).
// With capture enabled every row from n = 0 onwards is also retained.
class DecoupledHistory {
 public:
  DecoupledHistory(Channel channel, int step, LatticeRow previous, LatticeRow current, bool capture = false);

  Channel channel() const noexcept { return channel_; }
  int step() const noexcept { return step_; }
  const LatticeRow& previous() const noexcept { return previous_; }
  const LatticeRow& current() const noexcept { return current_; }

  bool captures() const noexcept { return capture_; }
  // Rows n = step() - rows().size() + 1 .. step(); empty unless capturing.
  const std::vector<LatticeRow>& rows() const noexcept { return rows_; }

  // Replaces the current row in place; lets tests perturb one channel.
  void overwrite_current(LatticeRow row) { current_ = std::move(row); }

  DecoupledHistory advanced(LatticeRow next) const;
  // In-place form of advanced().
  void advance(LatticeRow next);

 private:
  Channel channel_;
  int step_;
  LatticeRow previous_;
  LatticeRow current_;
  bool capture_;
  std::vector<LatticeRow> rows_;
};

struct ChannelHistories {
  DecoupledHistory r;
  DecoupledHistory l;
};

// Rows n = 0 and n = 1 for both channels, the second from one coupled step.
// Precondition: initial.step() == 0.
ChannelHistories bootstrap(const WalkState& initial, const CoinParameter& coin, bool capture = false);

DecoupledHistory decoupled_step(const DecoupledHistory& history, const CoinParameter& coin);

// Advances a history until its current row is `target_step`.
DecoupledHistory decoupled_evolve(DecoupledHistory history, const CoinParameter& coin, int target_step);

// Full walk state at step n from independently evolved R and L channels.
WalkState decoupled_walk(const WalkState& initial, const CoinParameter& coin, int steps);

}  // namespace qwalk
