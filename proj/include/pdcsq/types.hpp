#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace pdcsq {

using cplx = std::complex<double>;
using Matrix2c = Eigen::Matrix<cplx, 2, 2>;
using Matrix4c = Eigen::Matrix<cplx, 4, 4>;

inline constexpr cplx kI{0.0, 1.0};

/// Raised when an input violates a documented precondition.
class PdcError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undepleted monochromatic pump acting on a crystal of length L.
///
/// Only the gain exponent g = |sigma| L and the coupling phase
/// phi = arg(sigma) enter the physics; L sets the z scale for the
/// coupling matrix and the ODE oracle.
struct PumpCrystalConfig {
  double g = 0.0;
  double phi = 0.0;
  double length = 1.0;

  /// Complex coupling constant sigma.
  [[nodiscard]] cplx sigma() const { return std::polar(g / length, phi); }

  void validate() const {
    if (!(g >= 0.0)) throw PdcError("gain exponent g must be >= 0");
    if (!(length > 0.0)) throw PdcError("crystal length must be > 0");
  }
};

/// Which of the four solutions of the propagation problem to evaluate.
enum class Solution { exact, ma1, ma2, ma3 };

[[nodiscard]] inline std::string to_string(Solution s) {
  switch (s) {
    case Solution::exact: return "exact";
    case Solution::ma1: return "ma1";
    case Solution::ma2: return "ma2";
    case Solution::ma3: return "ma3";
  }
  return "?";
}

[[nodiscard]] inline Solution solution_from_string(const std::string& name) {
  if (name == "exact") return Solution::exact;
  if (name == "ma1") return Solution::ma1;
  if (name == "ma2") return Solution::ma2;
  if (name == "ma3") return Solution::ma3;
  throw PdcError("unknown solution '" + name + "'");
}

[[nodiscard]] inline int magnus_order(Solution s) {
  switch (s) {
    case Solution::ma1: return 1;
    case Solution::ma2: return 2;
    case Solution::ma3: return 3;
    case Solution::exact: break;
  }
  throw PdcError("exact solution has no Magnus order");
}

/// The four real parameters of one sideband pair.
///
/// psi_L and kappa are raw principal values in (-pi/2, pi/2]; psi_0 lies in
/// (-pi, pi] on the branch that makes the four parameters reproduce the
/// Bogoliubov matrix. When the squeezing vanishes exactly psi_L carries no
/// information and `angles` is `indeterminate`; psi_L is then zero.
struct SqueezingParams {
  enum class Angles { determinate, indeterminate };

  double r = 0.0;
  double psi_L = 0.0;
  double psi_0 = 0.0;
  double kappa = 0.0;
  Angles angles = Angles::determinate;

  [[nodiscard]] bool angles_defined() const { return angles == Angles::determinate; }
};

}  // namespace pdcsq
