#include "pdcsq/solutions.hpp"

#include "pdcsq/magnus.hpp"
#include "pdcsq/pdc_exact.hpp"

namespace pdcsq {

Symplectic4 solution_S_tilde(Solution which, const PumpCrystalConfig& cfg, double theta,
                             double kappa) {
  if (which == Solution::exact) return exact_S_tilde(cfg, theta, kappa);
  return magnus_S_tilde(magnus_order(which), cfg, theta, kappa);
}

SqueezingParams solution_params(Solution which, const PumpCrystalConfig& cfg, double theta,
                                double kappa) {
  if (which == Solution::exact) return squeezing_params(exact_UV(cfg, theta, kappa));
  return magnus_params(magnus_order(which), cfg, theta, kappa);
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2) throw PdcError("linspace needs at least 2 points");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  }
  out.back() = hi;
  return out;
}

SolutionCurve solution_curve(Solution which, const PumpCrystalConfig& cfg,
                             const std::vector<double>& thetas) {
  SolutionCurve curve;
  curve.theta = thetas;
  std::vector<AnglePoint> raw;
  raw.reserve(thetas.size());
  for (double theta : thetas) {
    const SqueezingParams p = solution_params(which, cfg, theta);
    curve.params.push_back(p);
    curve.s.push_back(squeezing_spectrum(p.r));
    raw.push_back({theta, p.r, p.angles_defined() ? std::optional<double>(p.psi_L) : std::nullopt});
  }
  curve.psi = unwrap_angle(raw);
  return curve;
}

}  // namespace pdcsq
