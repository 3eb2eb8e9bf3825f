#include "qwalk/error.hpp"

namespace qwalk {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Config: return "ConfigError";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::EmptyDistribution: return "EmptyDistribution";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::InvalidCutoff: return "InvalidCutoff";
    case ErrorKind::UnsupportedCoin: return "UnsupportedCoin";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::Underflow: return "Underflow";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

int exit_status(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Config: return 2;
    case ErrorKind::NonConvergent: return 3;
    case ErrorKind::Io: return 4;
    case ErrorKind::NotNormalized: return 5;
    case ErrorKind::DegenerateDenominator: return 6;
    case ErrorKind::UnsupportedCoin: return 7;
    case ErrorKind::InvalidCutoff: return 8;
    case ErrorKind::EmptyDistribution: return 9;
    case ErrorKind::Underflow: return 10;
    case ErrorKind::Overflow: return 11;
  }
  return 1;
}

}  // namespace qwalk
