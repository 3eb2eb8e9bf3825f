#pragma once

#include <complex>
#include <span>
#include <vector>

namespace qwalk {

using Amplitude = std::complex<double>;

enum class Channel { R, L };
enum class Sign { Plus, Minus };

inline constexpr double sign_value(Sign s) noexcept { return s == Sign::Plus ? 1.0 : -1.0; }

// Complex amplitudes over a contiguous block of lattice sites
// [first_site, first_site + size). Reads outside the block return zero.
class LatticeRow {
 public:
  LatticeRow() = default;
  LatticeRow(int first_site, std::vector<Amplitude> values);

  static LatticeRow zeros(int first_site, int last_site);
  static LatticeRow delta(int site, Amplitude value = 1.0);

  int first_site() const noexcept { return first_; }
  int last_site() const noexcept { return first_ + static_cast<int>(values_.size()) - 1; }
  bool empty() const noexcept { return values_.empty(); }
  std::size_t size() const noexcept { return values_.size(); }

  bool contains(int m) const noexcept { return m >= first_ && m <= last_site(); }
  Amplitude at(int m) const noexcept { return contains(m) ? values_[static_cast<std::size_t>(m - first_)] : Amplitude{}; }

  // Precondition: contains(m).
  Amplitude& operator[](int m) { return values_[static_cast<std::size_t>(m - first_)]; }
  const Amplitude& operator[](int m) const { return values_[static_cast<std::size_t>(m - first_)]; }

  std::span<const Amplitude> values() const noexcept { return values_; }

  double norm_squared() const noexcept;

  // Same amplitudes on the block [lo, hi]; must cover every nonzero entry.
  LatticeRow widened(int lo, int hi) const;

  friend bool operator==(const LatticeRow&, const LatticeRow&) = default;

 private:
  int first_ = 0;
  std::vector<Amplitude> values_;
};

}  // namespace qwalk
