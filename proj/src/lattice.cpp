#include "qwalk/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "qwalk/error.hpp"

namespace qwalk {

LatticeRow::LatticeRow(int first_site, std::vector<Amplitude> values)
    : first_(first_site), values_(std::move(values)) {}

LatticeRow LatticeRow::zeros(int first_site, int last_site) {
  if (last_site < first_site) return LatticeRow(first_site, {});
  return LatticeRow(first_site, std::vector<Amplitude>(static_cast<std::size_t>(last_site - first_site + 1)));
}

LatticeRow LatticeRow::delta(int site, Amplitude value) { return LatticeRow(site, {value}); }

double LatticeRow::norm_squared() const noexcept {
  double s = 0.0;
  for (const auto& a : values_) s += std::norm(a);
  return s;
}

LatticeRow LatticeRow::widened(int lo, int hi) const {
  LatticeRow out = zeros(lo, hi);
  for (int m = first_; m <= last_site(); ++m) {
    const Amplitude a = (*this)[m];
    if (out.contains(m)) {
      out[m] = a;
    } else if (a != Amplitude{}) {
      throw Error(ErrorKind::Config, "LatticeRow::widened: target block drops a nonzero amplitude");
    }
  }
  return out;
}

}  // namespace qwalk
