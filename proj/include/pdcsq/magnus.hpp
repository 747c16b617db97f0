#pragma once

#include "pdcsq/symplectic.hpp"
#include "pdcsq/types.hpp"

namespace pdcsq {

/// Coefficients of the truncated Magnus generator Omega_1 + ... + Omega_k.
///
/// The generator has the form [[i a I, b e^{i(phi+theta)} P],
/// [b e^{-i(phi+theta)} P, -i a I]], whose square is gamma_sq times the
/// identity. gamma_sq = b^2 - a^2 may be negative.
struct MagnusCoeffs {
  int order = 1;
  double a = 0.0;
  double b = 0.0;
  double gamma_sq = 0.0;
};

/// g^2 (j0 sin theta - j1 cos theta) / 2, the K-coefficient of Omega_2.
[[nodiscard]] double magnus_a2(double g, double theta);

/// g^3 (j0 + j2 - j0^3) / 6, the third-order correction to b.
[[nodiscard]] double magnus_b3_correction(double g, double theta);

[[nodiscard]] MagnusCoeffs magnus_coeffs(int order, double g, double theta);

/// The k-th Magnus term Omega_k in closed form, k in {1, 2, 3}.
[[nodiscard]] Matrix4c magnus_term(int k, const PumpCrystalConfig& cfg, double theta);

/// Phi_L exp(Omega_1 + ... + Omega_k), evaluated through the 2x2 block
/// reduction so that no square root of gamma_sq is taken.
[[nodiscard]] Symplectic4 magnus_S_tilde(int k, const PumpCrystalConfig& cfg, double theta,
                                         double kappa);

/// Squeezing parameters of the order-k approximation from the closed forms.
/// psi_L is reduced to (-pi/2, pi/2], psi_0 takes the branch consistent
/// with the matrix (psi_0 = phi - psi_L modulo pi); kappa is passed through.
[[nodiscard]] SqueezingParams magnus_params(int k, const PumpCrystalConfig& cfg, double theta,
                                            double kappa);

/// True iff the Magnus series is guaranteed to converge, i.e. g < pi.
[[nodiscard]] bool convergence_bound_ok(double g);

/// Maps an angle to (-pi/2, pi/2] modulo pi.
[[nodiscard]] double reduce_half_turn(double angle);

}  // namespace pdcsq
