#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pdcsq/symplectic.hpp"
#include "pdcsq/types.hpp"

namespace pdcsq {

/// The closed forms under test. Swapping one of these out lets the
/// validation suite be checked against a deliberately broken build.
struct ClosedForms {
  std::function<Symplectic4(const PumpCrystalConfig&, double theta, double kappa)> exact_S_tilde;
  std::function<Symplectic4(int k, const PumpCrystalConfig&, double theta, double kappa)>
      magnus_S_tilde;
  std::function<Matrix4c(int k, const PumpCrystalConfig&, double theta)> magnus_term;

  static ClosedForms shipped();
};

enum class ValidationLevel { quick, full };

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  [[nodiscard]] bool all_passed() const;
};

/// Cross-checks every closed form against its numerical oracle. `quick`
/// uses coarse grids; `full` uses a 100 x 100 (g, theta) grid and 1000
/// randomized Bloch-Messiah cases.
[[nodiscard]] ValidationReport run_validation(ValidationLevel level,
                                              const ClosedForms& forms = ClosedForms::shipped());

}  // namespace pdcsq
