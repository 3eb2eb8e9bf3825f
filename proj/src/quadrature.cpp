#include "qwalk/quadrature.hpp"

#include "qwalk/error.hpp"

namespace qwalk {

TrapezoidRule TrapezoidRule::brillouin_zone(int intervals, double half_period) {
  if (intervals < 2) throw Error(ErrorKind::Config, "trapezoid rule needs at least two intervals");
  const double h = 2.0 * half_period / intervals;
  TrapezoidRule rule;
  rule.nodes.resize(static_cast<std::size_t>(intervals) + 1);
  rule.weights.assign(static_cast<std::size_t>(intervals) + 1, h);
  for (int j = 0; j <= intervals; ++j) {
    // Mirror pairs are computed from the same |offset| so the set is exactly symmetric.
    const int off = 2 * j - intervals;
    rule.nodes[static_cast<std::size_t>(j)] = off * (half_period / intervals);
  }
  rule.weights.front() *= 0.5;
  rule.weights.back() *= 0.5;
  return rule;
}

}  // namespace qwalk
