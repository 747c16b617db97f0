#include "pdcsq/homodyne.hpp"

#include <cmath>
#include <numbers>

#include "pdcsq/solutions.hpp"

namespace pdcsq {

double noise_spectrum(double r, double psi_L, double beta) {
  const double c = std::cos(psi_L - beta);
  const double s = std::sin(psi_L - beta);
  return c * c * std::exp(2.0 * r) + s * s * std::exp(-2.0 * r);
}

double locked_beta(Solution which, const PumpCrystalConfig& cfg) {
  const SqueezingParams p = solution_params(which, cfg, 0.0);
  return p.psi_L - std::numbers::pi / 2.0;
}

std::vector<std::pair<double, double>> noise_spectrum_curve(Solution which,
                                                            const PumpCrystalConfig& cfg,
                                                            const std::vector<double>& thetas,
                                                            const HomodyneConfig& homodyne) {
  const double beta = homodyne.lock == HomodyneConfig::Lock::lock_at_theta_zero
                          ? locked_beta(which, cfg)
                          : homodyne.beta;
  std::vector<std::pair<double, double>> out;
  out.reserve(thetas.size());
  for (double theta : thetas) {
    const SqueezingParams p = solution_params(which, cfg, theta);
    // r == 0 exactly is shot noise whatever the angle
    out.emplace_back(theta, p.angles_defined() ? noise_spectrum(p.r, p.psi_L, beta) : 1.0);
  }
  return out;
}

}  // namespace pdcsq
