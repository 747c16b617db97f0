#pragma once

#include <map>
#include <vector>

#include "pdcsq/types.hpp"

namespace pdcsq {

/// Relative distance (theta_0 - theta_1)/theta_1 between the first zero of
/// the exact squeezing, theta_0 = sqrt(g^2 + pi^2), and that of the
/// first-order Magnus approximation, theta_1 = pi.
[[nodiscard]] double ultra_high_gain_distance(double g);

/// First zero of the exact squeezing parameter.
[[nodiscard]] double first_zero_exact(double g);

/// Squeezing in dB below shot noise, -10 log10 exp(-2 r).
[[nodiscard]] double squeezing_db(double r);

/// Theta grid used for the spectral comparisons: [-4 pi, 4 pi], 2001 points.
[[nodiscard]] std::vector<double> default_theta_grid();

struct GainSweep {
  double theta_fixed = 0.0;
  std::vector<double> g_grid;
  std::map<Solution, std::vector<double>> curves;
};

/// r(g) at fixed theta for each requested solution. Gains beyond pi are
/// evaluated but lie outside the guaranteed Magnus convergence region.
[[nodiscard]] GainSweep gain_sweep(double theta_fixed, const std::vector<double>& g_grid,
                                   const std::vector<Solution>& solutions, double phi = 0.0);

enum class TaylorParameter { r, psi_L };

struct TaylorCoefficient {
  int k = 0;
  double estimate = 0.0;
  double uncertainty = 0.0;
  double reference = 0.0;
};

struct TaylorReport {
  TaylorParameter parameter = TaylorParameter::r;
  Solution solution = Solution::exact;
  double theta = 0.0;
  /// k = 1..max_order for r, k = 0..max_order for psi_L.
  std::vector<TaylorCoefficient> coefficients;
};

/// Closed-form Taylor coefficient x^[k] in x = sum x^[k] g^k / k!.
[[nodiscard]] double tabulated_taylor_coefficient(TaylorParameter parameter, Solution solution,
                                                  double theta, int k, double phi = 0.0);

/// Estimates Taylor coefficients in g by a least-squares polynomial fit of
/// degree max_order + 2 to 10 samples over g in [1e-3, 2e-2].
[[nodiscard]] TaylorReport taylor_extract(TaylorParameter parameter, Solution solution,
                                          double theta, int max_order, double phi = 0.0);

struct DeviationMetrics {
  double max_abs_s = 0.0;
  double max_abs_psi = 0.0;
};

/// Max pointwise difference of the squeezing spectra and of the continuous
/// squeezing angles of two solutions on a common grid.
[[nodiscard]] DeviationMetrics deviation_metrics(Solution a, Solution b,
                                                 const PumpCrystalConfig& cfg,
                                                 const std::vector<double>& grid);

}  // namespace pdcsq
