#include "pdcsq/validation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "pdcsq/magnus.hpp"
#include "pdcsq/oracle.hpp"
#include "pdcsq/pdc_exact.hpp"
#include "pdcsq/solutions.hpp"

namespace pdcsq {

namespace {

constexpr double pi = std::numbers::pi;

double max_abs_diff(const Matrix4c& a, const Matrix4c& b) { return (a - b).cwiseAbs().maxCoeff(); }

CheckResult below(std::string name, double measured, double threshold) {
  return {std::move(name), measured, threshold, measured < threshold};
}

}  // namespace

ClosedForms ClosedForms::shipped() {
  ClosedForms f;
  f.exact_S_tilde = [](const PumpCrystalConfig& cfg, double theta, double kappa) {
    return pdcsq::exact_S_tilde(cfg, theta, kappa);
  };
  f.magnus_S_tilde = [](int k, const PumpCrystalConfig& cfg, double theta, double kappa) {
    return pdcsq::magnus_S_tilde(k, cfg, theta, kappa);
  };
  f.magnus_term = [](int k, const PumpCrystalConfig& cfg, double theta) {
    return pdcsq::magnus_term(k, cfg, theta);
  };
  return f;
}

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

ValidationReport run_validation(ValidationLevel level, const ClosedForms& forms) {
  const bool full = level == ValidationLevel::full;
  const int grid_n = full ? 100 : 8;
  const int bm_cases = full ? 1000 : 50;
  const int quadrature_points = full ? 10 : 2;
  std::mt19937_64 rng(20180312);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  ValidationReport report;
  const std::vector<double> gains = linspace(0.0, pi, grid_n);
  const std::vector<double> thetas = linspace(-4.0 * pi, 4.0 * pi, grid_n);

  double oracle_dev = 0.0;
  double symplectic_exact = 0.0;
  double symplectic_magnus = 0.0;
  for (double g : gains) {
    for (double theta : thetas) {
      const PumpCrystalConfig cfg{g, 0.0, 1.0};
      const Symplectic4 exact = forms.exact_S_tilde(cfg, theta, 0.0);
      oracle_dev = std::max(
          oracle_dev, max_abs_diff(exact.matrix(), oracle::ode_S_tilde(cfg, theta, 0.0).matrix()));
      symplectic_exact = std::max(symplectic_exact, check_symplectic(exact));
      for (int k = 1; k <= 3; ++k) {
        symplectic_magnus =
            std::max(symplectic_magnus, check_symplectic(forms.magnus_S_tilde(k, cfg, theta, 0.0)));
      }
    }
  }
  report.checks.push_back(below("exact S-tilde vs RK4 oracle", oracle_dev, 1e-8));
  report.checks.push_back(below("exact S-tilde symplectic", symplectic_exact, 1e-12));
  report.checks.push_back(below("Magnus S-tilde symplectic", symplectic_magnus, 1e-12));

  double bm_reconstruction = 0.0;
  double bm_r = 0.0;
  for (int n = 0; n < bm_cases; ++n) {
    const PumpCrystalConfig cfg{pi * unit(rng), pi * (2.0 * unit(rng) - 1.0), 1.0};
    const double theta = 4.0 * pi * (2.0 * unit(rng) - 1.0);
    const double kappa = pi * (2.0 * unit(rng) - 1.0);
    const Symplectic4 s = forms.exact_S_tilde(cfg, theta, kappa);
    const SqueezingParams p = squeezing_params(s.bogoliubov());
    const BlochMessiahFactors f = bloch_messiah(p);
    bm_reconstruction = std::max(bm_reconstruction, max_abs_diff(f.reconstruct(), s.matrix()));
    bm_r = std::max(bm_r, std::abs(oracle::bloch_messiah_numeric(s).r - p.r));
  }
  report.checks.push_back(below("Bloch-Messiah reconstruction", bm_reconstruction, 1e-10));
  report.checks.push_back(below("Bloch-Messiah r vs SVD oracle", bm_r, 1e-8));

  double term_dev = 0.0;
  double expm_dev = 0.0;
  for (int n = 0; n < quadrature_points; ++n) {
    const PumpCrystalConfig cfg{pi * unit(rng), pi * (2.0 * unit(rng) - 1.0), 1.0};
    const double theta = 4.0 * pi * (2.0 * unit(rng) - 1.0);
    const double kappa = pi * (2.0 * unit(rng) - 1.0);
    Matrix4c generator = Matrix4c::Zero();
    for (int k = 1; k <= 3; ++k) {
      const Matrix4c term = forms.magnus_term(k, cfg, theta);
      term_dev = std::max(term_dev,
                          max_abs_diff(term, oracle::magnus_term_quadrature(k, cfg, theta, 32)));
      generator += term;
      Matrix4c phase = Matrix4c::Zero();
      phase.diagonal() << std::polar(1.0, kappa - theta), std::polar(1.0, -kappa - theta),
          std::polar(1.0, theta - kappa), std::polar(1.0, theta + kappa);
      expm_dev = std::max(expm_dev, max_abs_diff(forms.magnus_S_tilde(k, cfg, theta, kappa).matrix(),
                                                 phase * oracle::expm_numeric(generator)));
    }
  }
  report.checks.push_back(below("Magnus terms vs quadrature", term_dev, 1e-9));
  report.checks.push_back(below("Magnus S-tilde vs numeric expm", expm_dev, 1e-10));
  return report;
}

}  // namespace pdcsq
