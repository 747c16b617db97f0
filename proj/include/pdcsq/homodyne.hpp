#pragma once

#include <utility>
#include <vector>

#include "pdcsq/types.hpp"

namespace pdcsq {

/// Local-oscillator phase setting for balanced homodyne detection with unit
/// detector efficiency in the strong-LO limit.
struct HomodyneConfig {
  enum class Lock { fixed_beta, lock_at_theta_zero };

  double beta = 0.0;
  Lock lock = Lock::lock_at_theta_zero;
};

/// Shot-noise-normalized photocurrent spectral density for squeezed vacuum:
/// cos^2(psi_L - beta) e^{2r} + sin^2(psi_L - beta) e^{-2r}.
[[nodiscard]] double noise_spectrum(double r, double psi_L, double beta);

/// LO phase that puts the squeezed quadrature on the detector at perfect
/// phase matching: psi_L(theta = 0) - beta = pi/2.
[[nodiscard]] double locked_beta(Solution which, const PumpCrystalConfig& cfg);

/// Pointwise noise spectrum of one solution. Each point uses the raw
/// (r >= 0) squeezing angle of that point, since the noise is not invariant
/// under the pi/2 re-labelling used for the continuous angle.
[[nodiscard]] std::vector<std::pair<double, double>> noise_spectrum_curve(
    Solution which, const PumpCrystalConfig& cfg, const std::vector<double>& thetas,
    const HomodyneConfig& homodyne);

}  // namespace pdcsq
