#pragma once

#include <vector>

namespace qwalk {

// Closed trapezoid rule on [-half_period, half_period] with `intervals`
// uniform intervals (intervals + 1 nodes, endpoint weights halved). On a
// periodic integrand this equals the periodic rule on `intervals` nodes and
// converges exponentially; the node set is symmetric under k -> -k.
struct TrapezoidRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  static TrapezoidRule brillouin_zone(int intervals, double half_period);
};

}  // namespace qwalk
