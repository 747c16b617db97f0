#include "pdcsq/oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace pdcsq::oracle {

namespace {

double mismatch_of(const PumpCrystalConfig& cfg, double theta) { return 2.0 * theta / cfg.length; }

Matrix4c phase_matrix(double theta, double kappa) {
  Matrix4c phi = Matrix4c::Zero();
  phi(0, 0) = std::polar(1.0, kappa - theta);
  phi(1, 1) = std::polar(1.0, -kappa - theta);
  phi(2, 2) = std::conj(phi(0, 0));
  phi(3, 3) = std::conj(phi(1, 1));
  return phi;
}

Matrix4c commutator(const Matrix4c& a, const Matrix4c& b) { return a * b - b * a; }

// Composite Gauss rule on [lo, hi].
struct Quadrature {
  std::vector<double> points;
  std::vector<double> weights;
};

Quadrature composite_rule(const GaussRule& rule, double lo, double hi, int panels) {
  Quadrature q;
  const double width = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * width;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      q.points.push_back(mid + 0.5 * width * rule.nodes[j]);
      q.weights.push_back(0.5 * width * rule.weights[j]);
    }
  }
  return q;
}

}  // namespace

GaussRule gauss_legendre(int n) {
  if (n < 1) throw PdcError("gauss_legendre: need at least one node");
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int m = 2; m <= n; ++m) {
        const double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
        p0 = p1;
        p1 = p2;
      }
      const double pn = n == 1 ? x : p1;
      const double pn_1 = n == 1 ? 1.0 : p0;
      dp = n * (x * pn - pn_1) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

Symplectic4 rk4_fundamental(const PumpCrystalConfig& cfg, double theta, int steps) {
  cfg.validate();
  const double delta = mismatch_of(cfg, theta);
  const double h = cfg.length / steps;
  // -i F(z) at the step start, midpoint and end; the end value is reused as
  // the next start.
  Matrix4c g_start = -kI * coupling_matrix(cfg, delta, 0.0);
  Matrix4c m = Matrix4c::Identity();
  for (int n = 0; n < steps; ++n) {
    const double z = n * h;
    const Matrix4c g_mid = -kI * coupling_matrix(cfg, delta, z + 0.5 * h);
    const Matrix4c g_end = -kI * coupling_matrix(cfg, delta, z + h);
    const Matrix4c k1 = g_start * m;
    const Matrix4c k2 = g_mid * (m + 0.5 * h * k1);
    const Matrix4c k3 = g_mid * (m + 0.5 * h * k2);
    const Matrix4c k4 = g_end * (m + h * k3);
    m += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    g_start = g_end;
  }
  return Symplectic4(m);
}

Propagation ode_propagate(const PumpCrystalConfig& cfg, double theta, const IntegratorSpec& spec) {
  if (spec.steps < 16) throw PdcError("ode_propagate: at least 16 steps required");
  int steps = spec.steps;
  Matrix4c coarse = rk4_fundamental(cfg, theta, steps).matrix();
  while (2 * steps <= spec.max_steps) {
    steps *= 2;
    const Matrix4c fine = rk4_fundamental(cfg, theta, steps).matrix();
    const double defect = (fine - coarse).cwiseAbs().maxCoeff();
    if (defect < spec.tolerance) {
      const Matrix4c accepted = spec.richardson ? Matrix4c((16.0 * fine - coarse) / 15.0) : fine;
      return {Symplectic4(accepted), steps, defect};
    }
    coarse = fine;
  }
  throw PdcError("ode_propagate: no convergence within " + std::to_string(spec.max_steps) +
                 " steps");
}

Symplectic4 ode_S_tilde(const PumpCrystalConfig& cfg, double theta, double kappa,
                        const IntegratorSpec& spec) {
  return Symplectic4(phase_matrix(theta, kappa) * ode_propagate(cfg, theta, spec).s.matrix());
}

Matrix4c expm_numeric(const Matrix4c& m) {
  if (!m.allFinite()) throw PdcError("expm_numeric: non-finite input");
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  if (norm > 700.0) throw PdcError("expm_numeric: norm too large, result would overflow");
  int squarings = 0;
  if (norm > 0.125) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.125)));
  const Matrix4c a = m / std::ldexp(1.0, squarings);
  // ||a|| <= 1/8: 20 terms put the truncation far below rounding
  Matrix4c result = Matrix4c::Identity();
  Matrix4c term = Matrix4c::Identity();
  for (int n = 1; n <= 20; ++n) {
    term = term * a / static_cast<double>(n);
    result += term;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

Matrix4c magnus_term_quadrature(int k, const PumpCrystalConfig& cfg, double theta, int panels,
                                int nodes_per_panel) {
  if (k < 1 || k > 3) throw PdcError("magnus_term_quadrature: unsupported order " + std::to_string(k));
  if (panels < 32) throw PdcError("magnus_term_quadrature: at least 32 panels required");
  cfg.validate();
  const double delta = mismatch_of(cfg, theta);
  const double length = cfg.length;
  const GaussRule rule = gauss_legendre(nodes_per_panel);
  const auto F = [&](double z) { return coupling_matrix(cfg, delta, z); };
  // int_0^upper F(z) dz
  const auto integral_of_F = [&](double upper) {
    Matrix4c sum = Matrix4c::Zero();
    const Quadrature q = composite_rule(rule, 0.0, upper, panels);
    for (std::size_t i = 0; i < q.points.size(); ++i) sum += q.weights[i] * F(q.points[i]);
    return sum;
  };

  const Quadrature outer = composite_rule(rule, 0.0, length, panels);
  if (k == 1) return -kI * integral_of_F(length);

  Matrix4c total = Matrix4c::Zero();
  for (std::size_t i = 0; i < outer.points.size(); ++i) {
    const double z1 = outer.points[i];
    const Matrix4c f1 = F(z1);
    const Quadrature middle = composite_rule(rule, 0.0, z1, panels);
    Matrix4c inner = Matrix4c::Zero();
    for (std::size_t j = 0; j < middle.points.size(); ++j) {
      const double z2 = middle.points[j];
      const Matrix4c f2 = F(z2);
      if (k == 2) {
        inner += middle.weights[j] * commutator(f1, f2);
      } else {
        // The innermost integrand is linear in F(z3), so the z3 integral
        // can be taken before forming the commutators.
        const Matrix4c g3 = integral_of_F(z2);
        inner += middle.weights[j] *
                 (commutator(f1, commutator(f2, g3)) + commutator(g3, commutator(f2, f1)));
      }
    }
    total += outer.weights[i] * inner;
  }
  if (k == 2) return -0.5 * total;
  return (kI / 6.0) * total;
}

Symplectic4 magnus_S_tilde_numeric(int k, const PumpCrystalConfig& cfg, double theta,
                                   double kappa, int panels) {
  Matrix4c generator = Matrix4c::Zero();
  for (int i = 1; i <= k; ++i) generator += magnus_term_quadrature(i, cfg, theta, panels);
  return Symplectic4(phase_matrix(theta, kappa) * expm_numeric(generator));
}

namespace {

// T = O e^{i d} O^T for a symmetric unitary T; returns O e^{i d / 2}.
Matrix2c takagi_symmetric_unitary(const Matrix2c& t) {
  const Eigen::Matrix2d re = t.real();
  const Eigen::Matrix2d im = t.imag();
  // Re T and Im T commute; a generic combination shares their eigenbasis.
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(re + 0.6180339887498949 * im);
  const Eigen::Matrix2d o = eig.eigenvectors();
  const Matrix2c diag = o.transpose().cast<cplx>() * t * o.cast<cplx>();
  Matrix2c half = Matrix2c::Zero();
  for (int i = 0; i < 2; ++i) half(i, i) = std::polar(1.0, 0.5 * std::arg(diag(i, i)));
  return o.cast<cplx>() * half;
}

// Nearest unitary matrix (polar factor) of a 2x2 block.
Matrix2c unitary_part(const Matrix2c& m) {
  const Eigen::JacobiSVD<Matrix2c> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace

BlochMessiahFactors bloch_messiah_numeric(const Symplectic4& s) {
  if (check_symplectic(s) > 1e-10 * std::max(1.0, s.matrix().cwiseAbs2().maxCoeff())) {
    throw PdcError("bloch_messiah_numeric: input is not symplectic");
  }
  const Eigen::JacobiSVD<Matrix4c> svd(s.matrix());
  const auto& sv = svd.singularValues();
  BlochMessiahFactors f;
  f.r = 0.25 * (std::log(sv(0)) + std::log(sv(1)) - std::log(sv(2)) - std::log(sv(3)));

  const Matrix2c q1 = unitary_part(s.upper_left());
  if (std::sinh(f.r) < 1e-9) {
    f.V2 = q1;
    f.W2 = Matrix2c::Identity();
    return f;
  }
  const Matrix2c q2 = unitary_part(s.upper_right());
  // V2 W2^dagger = Q1 and V2 W2^T = Q2 imply V2 V2^T = Q1 Q2^T.
  Matrix2c t = q1 * q2.transpose();
  t = 0.5 * (t + t.transpose());
  f.V2 = takagi_symmetric_unitary(t);
  f.W2 = q1.adjoint() * f.V2;
  return f;
}

}  // namespace pdcsq::oracle
