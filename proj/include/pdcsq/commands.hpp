#pragma once

#include <numbers>
#include <string>
#include <vector>

#include "pdcsq/analysis.hpp"
#include "pdcsq/homodyne.hpp"
#include "pdcsq/types.hpp"

namespace pdcsq::commands {

/// Settings shared by the figure-reproduction subcommands.
struct RunConfig {
  double g = 1.84;
  double phi = 0.0;
  double theta_min = -4.0 * std::numbers::pi;
  double theta_max = 4.0 * std::numbers::pi;
  int theta_points = 2001;
  std::vector<Solution> solutions{Solution::exact};

  /// Throws PdcError on invalid settings; returns warnings otherwise.
  [[nodiscard]] std::vector<std::string> validate() const;
  [[nodiscard]] std::vector<double> theta_grid() const;
};

struct GainSweepConfig {
  double theta = std::numbers::pi / 2.0;
  double phi = 0.0;
  double g_min = 0.0;
  double g_max = std::numbers::pi;
  int g_points = 201;
  std::vector<Solution> solutions{Solution::exact, Solution::ma1, Solution::ma2, Solution::ma3};

  [[nodiscard]] std::vector<std::string> validate() const;
};

/// Fixed 17-significant-digit rendering used for every CSV cell.
[[nodiscard]] std::string format_number(double x);

/// theta, then s_<sol>, psi_<sol> per requested solution, then gamma_real.
/// psi columns hold the continuous squeezing angle.
[[nodiscard]] std::string spectrum_csv(const RunConfig& cfg);

/// theta, noise_<sol> per requested solution, gamma_real.
[[nodiscard]] std::string homodyne_csv(const RunConfig& cfg, const HomodyneConfig& homodyne);

/// g, r_<sol> per requested solution.
[[nodiscard]] std::string gain_sweep_csv(const GainSweepConfig& cfg);

/// Taylor coefficients of r (k = 1..4) or psi_L (k = 0..3) for all four
/// solutions: k, then <sol>, <sol>_uncertainty, <sol>_reference.
[[nodiscard]] std::string taylor_table(double theta, TaylorParameter parameter, double phi = 0.0);

/// Parses a comma-separated list such as "exact,ma1,ma3".
[[nodiscard]] std::vector<Solution> parse_solutions(const std::string& list);

}  // namespace pdcsq::commands
