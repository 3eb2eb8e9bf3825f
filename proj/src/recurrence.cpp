#include "qwalk/recurrence.hpp"

#include <algorithm>

#include "qwalk/error.hpp"
#include "qwalk/parallel.hpp"

namespace qwalk {

DecoupledHistory::DecoupledHistory(Channel channel, int step, LatticeRow previous, LatticeRow current, bool capture)
    : channel_(channel), step_(step), previous_(std::move(previous)), current_(std::move(current)), capture_(capture) {
  if (step < 1) throw Error(ErrorKind::Config, "DecoupledHistory needs rows n-1 and n with n >= 1");
  if (capture_) rows_ = {previous_, current_};
}

DecoupledHistory DecoupledHistory::advanced(LatticeRow next) const {
  DecoupledHistory out = *this;
  out.advance(std::move(next));
  return out;
}

void DecoupledHistory::advance(LatticeRow next) {
  ++step_;
  previous_ = std::move(current_);
  current_ = std::move(next);
  if (capture_) rows_.push_back(current_);
}

ChannelHistories bootstrap(const WalkState& initial, const CoinParameter& coin, bool capture) {
  if (initial.step() != 0) throw Error(ErrorKind::Config, "bootstrap: initial state must be at step 0");
  const WalkState first = step(initial, coin);
  return {DecoupledHistory(Channel::R, 1, initial.r_row(), first.r_row(), capture),
          DecoupledHistory(Channel::L, 1, initial.l_row(), first.l_row(), capture)};
}

namespace {

LatticeRow next_row(const DecoupledHistory& history, const CoinParameter& coin) {
  const LatticeRow& prev = history.previous();
  const LatticeRow& cur = history.current();
  const int lo = std::min(prev.first_site(), cur.first_site() - 1);
  const int hi = std::max(prev.last_site(), cur.last_site() + 1);
  const double s = coin.sqrt_rho();

  LatticeRow next = LatticeRow::zeros(lo, hi);
  for (int m = lo; m <= hi; ++m) {
    next[m] = prev.at(m) + s * (cur.at(m - 1) - cur.at(m + 1));
  }
  return next;
}

}  // namespace

DecoupledHistory decoupled_step(const DecoupledHistory& history, const CoinParameter& coin) {
  return history.advanced(next_row(history, coin));
}

DecoupledHistory decoupled_evolve(DecoupledHistory history, const CoinParameter& coin, int target_step) {
  while (history.step() < target_step) history.advance(next_row(history, coin));
  return history;
}

WalkState decoupled_walk(const WalkState& initial, const CoinParameter& coin, int steps) {
  if (steps < 0) throw Error(ErrorKind::Config, "decoupled_walk: steps must be nonnegative");
  if (steps == 0) return initial;
  ChannelHistories h = bootstrap(initial, coin);
  parallel_for(2, [&](std::size_t i) {
    DecoupledHistory& ch = i == 0 ? h.r : h.l;
    ch = decoupled_evolve(std::move(ch), coin, steps);
  });
  return WalkState::from_rows(steps, h.r.current(), h.l.current());
}

}  // namespace qwalk
