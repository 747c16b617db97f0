#include "pdcsq/analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "pdcsq/magnus.hpp"
#include "pdcsq/pdc_exact.hpp"
#include "pdcsq/solutions.hpp"
#include "pdcsq/specfun.hpp"

namespace pdcsq {

double ultra_high_gain_distance(double g) {
  const double x = g / std::numbers::pi;
  return x * x / (std::sqrt(x * x + 1.0) + 1.0);
}

double first_zero_exact(double g) { return std::hypot(g, std::numbers::pi); }

double squeezing_db(double r) { return 20.0 * r * std::numbers::log10e; }

std::vector<double> default_theta_grid() {
  return linspace(-4.0 * std::numbers::pi, 4.0 * std::numbers::pi, 2001);
}

GainSweep gain_sweep(double theta_fixed, const std::vector<double>& g_grid,
                     const std::vector<Solution>& solutions, double phi) {
  GainSweep sweep;
  sweep.theta_fixed = theta_fixed;
  sweep.g_grid = g_grid;
  for (Solution which : solutions) {
    auto& curve = sweep.curves[which];
    curve.reserve(g_grid.size());
    for (double g : g_grid) {
      curve.push_back(solution_params(which, {g, phi, 1.0}, theta_fixed).r);
    }
  }
  return sweep;
}

double tabulated_taylor_coefficient(TaylorParameter parameter, Solution solution, double theta,
                                    int k, double phi) {
  using specfun::sph_bessel;
  const double j0 = sph_bessel(0, theta);
  if (parameter == TaylorParameter::r) {
    if (k == 1) return j0;
    if (k == 3 && (solution == Solution::exact || solution == Solution::ma3)) {
      return j0 - j0 * j0 * j0 + sph_bessel(2, theta);
    }
    return 0.0;
  }
  if (k == 0) return 0.5 * (phi - theta);
  if (k == 2 && solution != Solution::ma1) {
    return 0.5 * (std::sin(theta) * j0 - std::cos(theta) * sph_bessel(1, theta));
  }
  return 0.0;
}

TaylorReport taylor_extract(TaylorParameter parameter, Solution solution, double theta,
                            int max_order, double phi) {
  if (max_order < 1 || max_order > 4) throw PdcError("taylor_extract: max_order must be in 1..4");
  constexpr int kSamples = 10;
  constexpr double kGMin = 1e-3;
  constexpr double kGMax = 2e-2;
  const int degree = max_order + 2;

  const std::vector<double> gains = linspace(kGMin, kGMax, kSamples);
  std::vector<AnglePoint> angles;
  Eigen::VectorXd y(kSamples);
  for (int i = 0; i < kSamples; ++i) {
    const double g = gains[static_cast<std::size_t>(i)];
    const SqueezingParams p = solution_params(solution, {g, phi, 1.0}, theta);
    y(i) = p.r;
    angles.push_back({g, p.r, p.angles_defined() ? std::optional<double>(p.psi_L) : std::nullopt});
  }
  if (parameter == TaylorParameter::psi_L) {
    const std::vector<double> psi = unwrap_angle(angles);
    for (int i = 0; i < kSamples; ++i) y(i) = psi[static_cast<std::size_t>(i)];
  }

  // Fit in x = g / g_max to keep the Vandermonde matrix well scaled.
  Eigen::MatrixXd design(kSamples, degree + 1);
  for (int i = 0; i < kSamples; ++i) {
    const double x = gains[static_cast<std::size_t>(i)] / kGMax;
    double power = 1.0;
    for (int j = 0; j <= degree; ++j, power *= x) design(i, j) = power;
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(design);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 0.0 || sv(0) / sv(sv.size() - 1) > 1e12) {
    throw PdcError("taylor_extract: polynomial fit is ill-conditioned");
  }
  const Eigen::VectorXd beta = design.colPivHouseholderQr().solve(y);
  const Eigen::VectorXd residual = y - design * beta;
  const int dof = kSamples - (degree + 1);
  const double noise_fit = residual.squaredNorm() / dof;
  // Rounding floor for the samples themselves.
  const double noise_round =
      std::pow(16.0 * std::numeric_limits<double>::epsilon() * y.cwiseAbs().maxCoeff(), 2);
  const Eigen::MatrixXd normal_inverse = (design.transpose() * design).inverse();

  TaylorReport report;
  report.parameter = parameter;
  report.solution = solution;
  report.theta = theta;
  const int first = parameter == TaylorParameter::r ? 1 : 0;
  double factorial = 1.0;
  for (int k = 0; k <= max_order; ++k) {
    if (k > 0) factorial *= k;
    if (k < first) continue;
    const double scale = factorial / std::pow(kGMax, k);
    TaylorCoefficient c;
    c.k = k;
    c.estimate = beta(k) * scale;
    c.uncertainty = std::sqrt((noise_fit + noise_round) * normal_inverse(k, k)) * scale;
    c.reference = tabulated_taylor_coefficient(parameter, solution, theta, k, phi);
    report.coefficients.push_back(c);
  }
  return report;
}

DeviationMetrics deviation_metrics(Solution a, Solution b, const PumpCrystalConfig& cfg,
                                   const std::vector<double>& grid) {
  const SolutionCurve ca = solution_curve(a, cfg, grid);
  const SolutionCurve cb = solution_curve(b, cfg, grid);
  DeviationMetrics m;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    m.max_abs_s = std::max(m.max_abs_s, std::abs(ca.s[i] - cb.s[i]));
    m.max_abs_psi = std::max(m.max_abs_psi, std::abs(ca.psi[i] - cb.psi[i]));
  }
  return m;
}

}  // namespace pdcsq
