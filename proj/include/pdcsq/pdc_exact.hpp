#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "pdcsq/types.hpp"

namespace pdcsq {

/// Maps a sideband detuning Omega to the mismatch angle theta = Delta L / 2
/// and the group-delay angle kappa.
///
/// `theta_direct` treats the sweep variable itself as theta and has no group
/// delay. `quadratic` uses Delta(Omega) = -beta2 Omega^2 and kappa = tau_g Omega.
struct DispersionModel {
  enum class Kind { theta_direct, quadratic };

  Kind kind = Kind::theta_direct;
  double beta2 = 0.0;
  double tau_g = 0.0;

  static DispersionModel theta_direct() { return {}; }
  static DispersionModel quadratic(double beta2, double tau_g) {
    return {Kind::quadratic, beta2, tau_g};
  }
};

[[nodiscard]] double theta_of(const DispersionModel& model, double omega, double length);
[[nodiscard]] double kappa_of(const DispersionModel& model, double omega);

/// Slowly-varying-amplitude Bogoliubov coefficients at z = L.
struct ABPair {
  cplx A;
  cplx B;
};

/// Sideband Bogoliubov coefficients U(+-Omega), V(+-Omega).
struct BogoliubovPair {
  cplx U_plus;
  cplx V_plus;
  cplx U_minus;
  cplx V_minus;
};

/// A = e^{i theta}(C - i theta S), B = e^{i theta} g e^{i phi} S with
/// (C, S) = entire_cosh_sinhc(g^2 - theta^2).
[[nodiscard]] ABPair exact_AB(const PumpCrystalConfig& cfg, double theta);

/// Bogoliubov pair for given mismatch and group-delay angles. The sideband
/// phases are delta k(+-Omega) L = +-kappa - theta (degenerate phase matching,
/// k_p = 2 k_0).
[[nodiscard]] BogoliubovPair exact_UV(const PumpCrystalConfig& cfg, double theta, double kappa);

[[nodiscard]] BogoliubovPair exact_UV(const PumpCrystalConfig& cfg, const DispersionModel& model,
                                      double omega);

/// Tolerance on |U|^2 - |V|^2 = 1 accepted by squeezing_params.
inline constexpr double kUnitarityTolerance = 1e-6;

/// r = ln(|U|+|V|), psi_L = arg(U(W)V(-W))/2, psi_0 = arg(V(W)/U(W))/2,
/// kappa = arg(U(W)/U(-W))/2.
///
/// psi_L and kappa are principal values in (-pi/2, pi/2]. The half-angle
/// formulas fix each angle only modulo pi, and not every combination of
/// branches reproduces the pair, so psi_0 takes the branch in (-pi, pi]
/// that does (see input_angle_branch). Throws PdcError if the pair is not
/// a valid Bogoliubov transformation.
[[nodiscard]] SqueezingParams squeezing_params(const BogoliubovPair& pair);

/// The psi_0 consistent with U(W) = cosh(r) e^{i(psi_L - psi_0 + kappa)}.
[[nodiscard]] double input_angle_branch(double psi_L, double kappa, double arg_U_plus);

/// s = exp(-2 r).
[[nodiscard]] double squeezing_spectrum(double r);

/// One point of an angle curve to be unwrapped.
struct AnglePoint {
  double theta;
  double r;
  /// Raw angle; nullopt where it is indeterminate (r == 0).
  std::optional<double> psi;
};

/// Thrown when neighbouring samples cannot be joined unambiguously.
class GridTooCoarse : public PdcError {
 public:
  GridTooCoarse(double theta_from, double theta_to);
  double theta_from;
  double theta_to;
};

/// Removes the pi/2 jumps of a raw squeezing angle.
///
/// The point of largest r keeps its raw value; the curve is continued in
/// both directions, choosing at each step the branch psi + k pi/2 closest to
/// the linear extrapolation of the two previous points. Indeterminate points
/// are filled by linear interpolation between their determinate neighbours.
[[nodiscard]] std::vector<double> unwrap_angle(const std::vector<AnglePoint>& grid);

}  // namespace pdcsq
