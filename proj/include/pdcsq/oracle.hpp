#pragma once

#include "pdcsq/symplectic.hpp"
#include "pdcsq/types.hpp"

/// Brute-force numerical verifiers for the closed forms: z-ordered RK4
/// integration of d xi/dz = -i F(z) xi, a scaling-and-squaring matrix
/// exponential, nested Gauss-Legendre quadrature of the Magnus integrals and
/// an SVD/Takagi Bloch-Messiah factorization.
namespace pdcsq::oracle {

struct IntegratorSpec {
  /// Initial step count; doubled until two successive results agree.
  int steps = 64;
  /// Apply one Richardson step (16 S_2N - S_N)/15 to the accepted result.
  bool richardson = false;
  double tolerance = 1e-11;
  int max_steps = 1 << 18;
};

struct Propagation {
  Symplectic4 s;
  int steps = 0;
  /// max |S_N - S_{N/2}| at acceptance.
  double defect = 0.0;
};

/// Fundamental matrix of the slowly-varying amplitudes at z = L using a
/// fixed number of RK4 steps.
[[nodiscard]] Symplectic4 rk4_fundamental(const PumpCrystalConfig& cfg, double theta, int steps);

/// Step-halving certified RK4 propagation. Throws PdcError when the step
/// budget is exhausted.
[[nodiscard]] Propagation ode_propagate(const PumpCrystalConfig& cfg, double theta,
                                        const IntegratorSpec& spec = {});

/// Phi_L times the propagated fundamental matrix.
[[nodiscard]] Symplectic4 ode_S_tilde(const PumpCrystalConfig& cfg, double theta, double kappa,
                                      const IntegratorSpec& spec = {});

/// exp(m) by scaling and squaring around a Taylor core.
[[nodiscard]] Matrix4c expm_numeric(const Matrix4c& m);

/// Omega_k from nested composite Gauss-Legendre quadrature of the iterated
/// commutator integrals. panels >= 32.
[[nodiscard]] Matrix4c magnus_term_quadrature(int k, const PumpCrystalConfig& cfg, double theta,
                                              int panels, int nodes_per_panel = 6);

/// Phi_L expm(Omega_1 + ... + Omega_k) with quadrature Magnus terms.
[[nodiscard]] Symplectic4 magnus_S_tilde_numeric(int k, const PumpCrystalConfig& cfg,
                                                 double theta, double kappa, int panels = 32);

/// Bloch-Messiah factors of a block-structured symplectic matrix from its
/// singular values and a Takagi factorization, independent of the
/// parameter closed forms. Throws PdcError if s is not symplectic.
[[nodiscard]] BlochMessiahFactors bloch_messiah_numeric(const Symplectic4& s);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
[[nodiscard]] GaussRule gauss_legendre(int n);

}  // namespace pdcsq::oracle
