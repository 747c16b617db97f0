#include "pdcsq/symplectic.hpp"

#include <cmath>
#include <numbers>

namespace pdcsq {

Matrix4c symplectic_form() {
  Matrix4c k = Matrix4c::Zero();
  k.diagonal() << 1.0, 1.0, -1.0, -1.0;
  return k;
}

Matrix2c exchange2() {
  Matrix2c p;
  p << 0.0, 1.0, 1.0, 0.0;
  return p;
}

Symplectic4 Symplectic4::from_blocks(const Matrix2c& ul, const Matrix2c& ur) {
  Matrix4c m;
  m.topLeftCorner<2, 2>() = ul;
  m.topRightCorner<2, 2>() = ur;
  m.bottomLeftCorner<2, 2>() = ur.conjugate();
  m.bottomRightCorner<2, 2>() = ul.conjugate();
  return Symplectic4(m);
}

BogoliubovPair Symplectic4::bogoliubov() const {
  return {m_(0, 0), m_(0, 3), m_(1, 1), m_(1, 2)};
}

double Symplectic4::block_symmetry_residual() const {
  const double a = (m_.bottomRightCorner<2, 2>() - m_.topLeftCorner<2, 2>().conjugate())
                       .cwiseAbs()
                       .maxCoeff();
  const double b = (m_.bottomLeftCorner<2, 2>() - m_.topRightCorner<2, 2>().conjugate())
                       .cwiseAbs()
                       .maxCoeff();
  return std::max(a, b);
}

Matrix4c coupling_matrix(const PumpCrystalConfig& cfg, double mismatch, double z) {
  const cplx upper = kI * cfg.sigma() * std::polar(1.0, mismatch * z);
  const cplx lower = kI * std::conj(cfg.sigma()) * std::polar(1.0, -mismatch * z);
  Matrix4c f = Matrix4c::Zero();
  f.topRightCorner<2, 2>() = upper * exchange2();
  f.bottomLeftCorner<2, 2>() = lower * exchange2();
  return f;
}

Symplectic4 exact_S_tilde(const PumpCrystalConfig& cfg, double theta, double kappa) {
  const auto [A, B] = exact_AB(cfg, theta);
  Matrix2c phase = Matrix2c::Zero();
  phase(0, 0) = std::polar(1.0, kappa - theta);
  phase(1, 1) = std::polar(1.0, -kappa - theta);
  return Symplectic4::from_blocks(A * phase, B * phase * exchange2());
}

Symplectic4 assemble_S_tilde(const SqueezingParams& p) {
  Matrix2c lambda = Matrix2c::Zero();
  lambda(0, 0) = std::polar(1.0, p.kappa);
  lambda(1, 1) = std::polar(1.0, -p.kappa);
  const cplx diag = std::polar(std::cosh(p.r), p.psi_L - p.psi_0);
  const cplx off = std::polar(std::sinh(p.r), p.psi_L + p.psi_0);
  return Symplectic4::from_blocks(diag * lambda, off * lambda * exchange2());
}

double check_symplectic(const Matrix4c& s) {
  const Matrix4c k = symplectic_form();
  return (s * k * s.adjoint() - k).cwiseAbs().maxCoeff();
}

double check_symplectic(const Symplectic4& s) { return check_symplectic(s.matrix()); }

Matrix4c squeezer(double r) {
  const double c = std::cosh(r);
  const double s = std::sinh(r);
  Matrix4c d = Matrix4c::Zero();
  for (int i = 0; i < 4; ++i) d(i, i) = c;
  d(0, 2) = d(1, 3) = d(2, 0) = d(3, 1) = s;
  return d;
}

namespace {

Matrix4c block_diag_with_conjugate(const Matrix2c& b) {
  Matrix4c m = Matrix4c::Zero();
  m.topLeftCorner<2, 2>() = b;
  m.bottomRightCorner<2, 2>() = b.conjugate();
  return m;
}

// [[1, i], [1, -i]] / sqrt 2
Matrix2c quadrature_basis() {
  Matrix2c q;
  q << 1.0, kI, 1.0, -kI;
  return q / std::sqrt(2.0);
}

}  // namespace

Matrix4c BlochMessiahFactors::V() const { return block_diag_with_conjugate(V2); }
Matrix4c BlochMessiahFactors::W() const { return block_diag_with_conjugate(W2); }
Matrix4c BlochMessiahFactors::D() const { return squeezer(r); }
Matrix4c BlochMessiahFactors::reconstruct() const { return V() * D() * W().adjoint(); }

BlochMessiahFactors bloch_messiah(const SqueezingParams& p) {
  Matrix2c lambda = Matrix2c::Zero();
  lambda(0, 0) = std::polar(1.0, p.kappa);
  lambda(1, 1) = std::polar(1.0, -p.kappa);
  BlochMessiahFactors f;
  f.V2 = std::polar(1.0, p.psi_L) * lambda * quadrature_basis();
  f.W2 = std::polar(1.0, p.psi_0) * quadrature_basis();
  f.r = p.r;
  return f;
}

cplx modal_envelope(const SqueezingParams& p, double omega, EigenMode mode, double t) {
  const double phase = omega * t - p.kappa;
  const double profile = mode == EigenMode::cos ? std::cos(phase) : std::sin(phase);
  return std::polar(std::sqrt(2.0) / (2.0 * std::numbers::pi) * profile, -p.psi_L);
}

cplx eigenmode_sample(const SqueezingParams& p, double omega, EigenMode mode, double t) {
  if (omega < 0.0) {
    throw PdcError("eigenmode_sample: omega must be >= 0 (negative detunings are redundant)");
  }
  return modal_envelope(p, omega, mode, t);
}

cplx eigenmode_overlap(const SqueezingParams& p, double omega, EigenMode a, EigenMode b) {
  if (!(omega > 0.0)) throw PdcError("eigenmode_overlap: omega must be > 0");
  // The trapezoid rule is exact for the low-order trigonometric integrand.
  constexpr int kSamples = 64;
  const double period = 2.0 * std::numbers::pi / omega;
  cplx sum{};
  for (int n = 0; n < kSamples; ++n) {
    const double t = period * n / kSamples;
    sum += modal_envelope(p, omega, a, t) * std::conj(modal_envelope(p, omega, b, t));
  }
  return sum / static_cast<double>(kSamples);
}

QuadratureGains quadrature_map(const SqueezingParams& p) {
  return {std::exp(p.r), std::exp(-p.r)};
}

}  // namespace pdcsq
