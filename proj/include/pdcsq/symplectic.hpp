#pragma once

#include "pdcsq/pdc_exact.hpp"
#include "pdcsq/types.hpp"

namespace pdcsq {

/// K = diag(1, 1, -1, -1).
[[nodiscard]] Matrix4c symplectic_form();

/// The exchange matrix P = [[0, 1], [1, 0]].
[[nodiscard]] Matrix2c exchange2();

/// A 4x4 Bogoliubov matrix acting on (a(W), a(-W), a+(W), a+(-W)).
///
/// Construction does not enforce the symplectic condition; use
/// check_symplectic on anything that did not come from a closed form.
class Symplectic4 {
 public:
  Symplectic4() : m_(Matrix4c::Identity()) {}
  explicit Symplectic4(const Matrix4c& m) : m_(m) {}

  /// Builds [[U, V], [conj V, conj U]] from its upper 2x2 blocks.
  static Symplectic4 from_blocks(const Matrix2c& upper_left, const Matrix2c& upper_right);

  [[nodiscard]] const Matrix4c& matrix() const { return m_; }
  [[nodiscard]] cplx operator()(int row, int col) const { return m_(row, col); }
  [[nodiscard]] Matrix2c upper_left() const { return m_.topLeftCorner<2, 2>(); }
  [[nodiscard]] Matrix2c upper_right() const { return m_.topRightCorner<2, 2>(); }

  /// U(+-W), V(+-W) read off the first two rows.
  [[nodiscard]] BogoliubovPair bogoliubov() const;

  /// Max-abs deviation from the conjugation block symmetry.
  [[nodiscard]] double block_symmetry_residual() const;

 private:
  Matrix4c m_;
};

/// F(z) = [[0, i sigma e^{i Delta z} P], [i conj(sigma) e^{-i Delta z} P, 0]].
[[nodiscard]] Matrix4c coupling_matrix(const PumpCrystalConfig& cfg, double mismatch, double z);

/// Phi_L S for the exact solution at (theta, kappa).
[[nodiscard]] Symplectic4 exact_S_tilde(const PumpCrystalConfig& cfg, double theta, double kappa);

/// S-tilde expressed through the four squeezing parameters.
[[nodiscard]] Symplectic4 assemble_S_tilde(const SqueezingParams& p);

/// max |S K S^dagger - K|.
[[nodiscard]] double check_symplectic(const Symplectic4& s);
[[nodiscard]] double check_symplectic(const Matrix4c& s);

/// S-tilde = V D(r) W^dagger with V = diag(V2, conj V2), W = diag(W2, conj W2).
struct BlochMessiahFactors {
  Matrix2c V2;
  Matrix2c W2;
  double r = 0.0;

  [[nodiscard]] Matrix4c V() const;
  [[nodiscard]] Matrix4c W() const;
  [[nodiscard]] Matrix4c D() const;
  [[nodiscard]] Matrix4c reconstruct() const;
};

/// D(r) = [[cosh r I, sinh r I], [sinh r I, cosh r I]].
[[nodiscard]] Matrix4c squeezer(double r);

/// Closed-form factors built from the squeezing parameters.
[[nodiscard]] BlochMessiahFactors bloch_messiah(const SqueezingParams& p);

enum class EigenMode { cos, sin };

/// Envelope of the squeezing-eigenmode modal function with the optical
/// carrier dropped: (sqrt 2 / 2 pi) e^{-i psi_L} cos(W t - kappa) (or sin).
/// Accepts any sign of omega.
[[nodiscard]] cplx modal_envelope(const SqueezingParams& p, double omega, EigenMode mode, double t);

/// modal_envelope restricted to the non-redundant half omega >= 0.
[[nodiscard]] cplx eigenmode_sample(const SqueezingParams& p, double omega, EigenMode mode,
                                    double t);

/// (1/T) int_0^T f_a conj(f_b) dt over one beat period T = 2 pi / omega.
[[nodiscard]] cplx eigenmode_overlap(const SqueezingParams& p, double omega, EigenMode a,
                                     EigenMode b);

/// Output quadrature gains of the stretched and squeezed quadratures.
struct QuadratureGains {
  double stretch;
  double squeeze;
};

[[nodiscard]] QuadratureGains quadrature_map(const SqueezingParams& p);

}  // namespace pdcsq
