#pragma once

#include <vector>

#include "qwalk/lattice.hpp"
#include "qwalk/special.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

// Cubic truncation of the principal dispersion branch:
// w(k) = sqrt(rho) (X/T) k - (1/6) sqrt(rho) (1 - rho) (X^3/T) k^3.
double omega_hat(double k, double rho, LatticeScales scales = {});

inline constexpr double kDefaultCutoffWidth = 0.4;

// Gaussian low-pass filter G(q) = exp(-w^2 q^2).
class CutoffSpec {
 public:
  // Throws InvalidCutoff unless w > 0 and finite.
  explicit CutoffSpec(double w = kDefaultCutoffWidth);

  double w() const noexcept { return w_; }
  double c() const noexcept { return w_ * w_; }
  double gain(double q) const noexcept;

 private:
  double w_;
};

// Below this B the packet integral is evaluated as the pure Gaussian.
inline constexpr double kCubicThreshold = 1e-9;

// Z = int dk exp(i A k + i (B/3) k^3 - C k^2) for
// A = xi - sqrt(rho) tau, B = (1/2) sqrt(rho) (1 - rho) tau, C = w^2.
struct AiryPacket {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;

  static AiryPacket at(double xi, double tau, double rho, const CutoffSpec& cutoff);

  // (2pi / B^{1/3}) exp((3ABC + 2C^3)/(3B^2)) Ai((AB + C^2)/B^{4/3}), combined
  // in log space so that neither factor overflows; Gaussian limit for
  // |B| <= kCubicThreshold.
  double closed_form() const;

  // Direct oscillatory quadrature of the defining integral.
  OscillatoryResult quadrature() const;
};

// Z(xi, tau). With verify set the closed form is cross-checked against the
// quadrature and NonConvergent is thrown unless
// |closed - quad| <= kVerifyTolerance |quad| + quadrature error estimate.
inline constexpr double kVerifyTolerance = 1e-6;
double zeta(double xi, double tau, double rho, const CutoffSpec& cutoff, bool verify = false);

enum class Parity { Even, Odd };

// Parity of round(tau).
Parity default_parity(double tau);

// Long-wavelength fields for a walker started at site 0:
//   R+/-(xi,tau) = R00 [Z(+/-xi) +/- sqrt(rho) Z(+/-(xi-1))] +/- sqrt(1-rho) L00 Z(+/-(xi+1))
//   L+/-(xi,tau) = L00 [Z(+/-xi) -/+ sqrt(rho) Z(+/-(xi+1))] +/- sqrt(1-rho) R00 Z(+/-(xi-1))
// Amplitudes are in arbitrary units (the overall normalization is dropped).
class ContinuumFields {
 public:
  // Throws UnsupportedCoin for rho in {0, 1} and Config unless initial is an
  // n = 0 state supported on site 0.
  ContinuumFields(const WalkState& initial, const CoinParameter& coin, const CutoffSpec& cutoff = CutoffSpec{},
                  bool verify = false);

  const CoinParameter& coin() const noexcept { return coin_; }
  const CutoffSpec& cutoff() const noexcept { return cutoff_; }
  Amplitude r00() const noexcept { return r00_; }
  Amplitude l00() const noexcept { return l00_; }

  // The four fields share three packets per sign; amplitudes are complex
  // because the initial spinor is.
  struct Values {
    Amplitude r_plus, r_minus, l_plus, l_minus;
  };
  Values at(double xi, double tau) const;

  Amplitude field(Channel channel, Sign sign, double xi, double tau) const;

 private:
  double z(double xi, double tau) const { return zeta(xi, tau, coin_.rho(), cutoff_, verify_); }

  CoinParameter coin_;
  CutoffSpec cutoff_;
  bool verify_;
  Amplitude r00_;
  Amplitude l00_;
};

ContinuumFields continuum_fields(const WalkState& initial, const CoinParameter& coin,
                                 const CutoffSpec& cutoff = CutoffSpec{}, bool verify = false);

struct ContinuumDistribution {
  std::vector<double> xi;
  std::vector<double> p_total;
  std::vector<double> p_right;
  std::vector<double> p_left;

  double total() const noexcept;
};

// P^A(xi) = |A+(xi,tau) + (-1)^n A-(xi,tau)|^2 with (-1)^n from `parity`.
// With normalize set the values are rescaled so that sum P = 1 on the grid.
ContinuumDistribution continuum_probability(const ContinuumFields& fields, const std::vector<double>& xi_grid,
                                            double tau, Parity parity, bool normalize = false);

}  // namespace qwalk
