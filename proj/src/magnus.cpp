#include "pdcsq/magnus.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pdcsq/pdc_exact.hpp"
#include "pdcsq/specfun.hpp"

namespace pdcsq {

namespace {

void require_order(int k) {
  if (k < 1 || k > 3) throw PdcError("unsupported Magnus order " + std::to_string(k));
}

// [[0, e^{i chi} P], [e^{-i chi} P, 0]]
Matrix4c antidiagonal_generator(double chi) {
  Matrix4c m = Matrix4c::Zero();
  m.topRightCorner<2, 2>() = std::polar(1.0, chi) * exchange2();
  m.bottomLeftCorner<2, 2>() = std::polar(1.0, -chi) * exchange2();
  return m;
}

}  // namespace

double magnus_a2(double g, double theta) {
  using specfun::sph_bessel;
  return 0.5 * g * g *
         (sph_bessel(0, theta) * std::sin(theta) - sph_bessel(1, theta) * std::cos(theta));
}

double magnus_b3_correction(double g, double theta) {
  using specfun::sph_bessel;
  const double j0 = sph_bessel(0, theta);
  return g * g * g / 6.0 * (j0 + sph_bessel(2, theta) - j0 * j0 * j0);
}

MagnusCoeffs magnus_coeffs(int order, double g, double theta) {
  require_order(order);
  MagnusCoeffs c;
  c.order = order;
  c.b = g * specfun::sinc(theta);
  if (order >= 2) c.a = magnus_a2(g, theta);
  if (order == 3) c.b += magnus_b3_correction(g, theta);
  c.gamma_sq = c.b * c.b - c.a * c.a;
  return c;
}

Matrix4c magnus_term(int k, const PumpCrystalConfig& cfg, double theta) {
  require_order(k);
  cfg.validate();
  switch (k) {
    case 1:
      return cfg.g * specfun::sinc(theta) * antidiagonal_generator(cfg.phi + theta);
    case 2:
      return kI * magnus_a2(cfg.g, theta) * symplectic_form();
    default:
      return magnus_b3_correction(cfg.g, theta) * antidiagonal_generator(cfg.phi + theta);
  }
}

Symplectic4 magnus_S_tilde(int k, const PumpCrystalConfig& cfg, double theta, double kappa) {
  cfg.validate();
  const MagnusCoeffs mc = magnus_coeffs(k, cfg.g, theta);
  const auto [c, s] = specfun::entire_cosh_sinhc(mc.gamma_sq);
  Matrix2c lambda = Matrix2c::Zero();
  lambda(0, 0) = std::polar(1.0, kappa);
  lambda(1, 1) = std::polar(1.0, -kappa);
  const cplx diag = std::polar(1.0, -theta) * cplx(c, mc.a * s);
  const cplx off = std::polar(mc.b * s, cfg.phi);
  return Symplectic4::from_blocks(diag * lambda, off * lambda * exchange2());
}

SqueezingParams magnus_params(int k, const PumpCrystalConfig& cfg, double theta, double kappa) {
  cfg.validate();
  const MagnusCoeffs mc = magnus_coeffs(k, cfg.g, theta);
  const auto [c, s] = specfun::entire_cosh_sinhc(mc.gamma_sq);
  const cplx u = cplx(c, mc.a * s);
  const double v = mc.b * s;

  SqueezingParams p;
  p.kappa = kappa;
  if (v == 0.0) {
    p.angles = SqueezingParams::Angles::indeterminate;
  } else {
    p.r = std::asinh(std::abs(v));
    // arg of the real factor b sinh(gamma)/gamma is 0 or pi
    const double sign_term = v < 0.0 ? std::numbers::pi / 2.0 : 0.0;
    p.psi_L = reduce_half_turn(0.5 * (cfg.phi - theta) + 0.5 * std::arg(u) + sign_term);
  }
  // psi_0 = phi - psi_L modulo pi; the branch is the one matching U(W)
  p.psi_0 = input_angle_branch(p.psi_L, kappa, std::arg(std::polar(1.0, kappa - theta) * u));
  return p;
}

bool convergence_bound_ok(double g) { return g < std::numbers::pi; }

double reduce_half_turn(double angle) {
  constexpr double pi = std::numbers::pi;
  double x = std::remainder(angle, pi);  // [-pi/2, pi/2]
  if (x <= -pi / 2.0) x += pi;
  return x;
}

}  // namespace pdcsq
