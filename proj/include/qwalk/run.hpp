#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/lattice.hpp"
#include "qwalk/longwave.hpp"
#include "qwalk/table.hpp"

namespace qwalk {

enum class Mode { Walk, Decoupled, Spectral, Longwave, Dispersion, Compare, NV };

Mode parse_mode(std::string_view text);
const char* to_string(Mode mode) noexcept;

// "a", "bi", "a+bi", "a-bi", "i", "-i"; reals in any from_chars form.
Amplitude parse_complex(std::string_view text);
std::string format_complex(Amplitude value);

// Inclusive uniform grid "start:stop:step"; step > 0, stop >= start.
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  static GridSpec parse(std::string_view text);
  std::vector<double> points() const;
  std::string to_string() const;
};

struct RunConfig {
  Mode mode = Mode::Walk;
  std::optional<double> rho;
  std::optional<int> steps;
  std::optional<double> tau;
  Amplitude r0{0.70710678118654752440, 0.0};
  Amplitude l0{0.0, 0.70710678118654752440};
  double w = kDefaultCutoffWidth;
  std::optional<GridSpec> grid;
  int nodes = 4096;
  std::string out = "-";
  bool normalize = false;
  std::optional<Parity> parity;
  bool verify = false;

  // Throws Config when a field required by the mode is missing or a value is
  // out of range.
  void validate() const;
};

inline constexpr double kCompareTolerance = 1e-8;

struct RunResult {
  ResultTable table;
  std::vector<std::string> warnings;
  // False when a cross-check (compare, nv) exceeded its tolerance.
  bool within_tolerance = true;
};

RunResult run(const RunConfig& config);

}  // namespace qwalk
