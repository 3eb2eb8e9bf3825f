#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

// Failure categories surfaced by the library. The CLI maps each to its own
// exit status (see exit_status()).
enum class ErrorKind {
  Config,                 // invalid configuration or argument
  NotNormalized,          // initial spinor norm is not 1
  EmptyDistribution,      // distribution with zero total weight
  DegenerateDenominator,  // rho = 1 on the spectral path
  InvalidCutoff,          // Gaussian cutoff width w <= 0
  UnsupportedCoin,        // rho outside the range an operation supports
  NonConvergent,          // numerical check or quadrature failed its bound
  Underflow,              // Airy argument beyond the representable decay range
  Overflow,               // Airy phase too large to resolve in double precision
  Io,                     // file could not be written
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* to_string(ErrorKind kind) noexcept;

// success 0; Config 2; NonConvergent 3; Io 4; remaining kinds 5..10.
int exit_status(ErrorKind kind) noexcept;

}  // namespace qwalk
