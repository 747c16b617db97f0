#pragma once

#include <vector>

#include "pdcsq/symplectic.hpp"
#include "pdcsq/types.hpp"

namespace pdcsq {

/// S-tilde of the chosen solution at (theta, kappa).
[[nodiscard]] Symplectic4 solution_S_tilde(Solution which, const PumpCrystalConfig& cfg,
                                           double theta, double kappa = 0.0);

/// Squeezing parameters of the chosen solution. The exact solution goes
/// through the Bogoliubov coefficients, the Magnus orders through their
/// closed forms.
[[nodiscard]] SqueezingParams solution_params(Solution which, const PumpCrystalConfig& cfg,
                                              double theta, double kappa = 0.0);

/// n uniformly spaced points from lo to hi inclusive.
[[nodiscard]] std::vector<double> linspace(double lo, double hi, int n);

/// Squeezing spectrum and angles of one solution sampled on a theta grid.
struct SolutionCurve {
  std::vector<double> theta;
  std::vector<SqueezingParams> params;
  std::vector<double> s;
  /// Continuous (unwrapped) squeezing angle.
  std::vector<double> psi;
};

/// Throws GridTooCoarse if the angle cannot be unwrapped on this grid.
[[nodiscard]] SolutionCurve solution_curve(Solution which, const PumpCrystalConfig& cfg,
                                           const std::vector<double>& thetas);

}  // namespace pdcsq
