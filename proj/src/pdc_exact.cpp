#include "pdcsq/pdc_exact.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pdcsq/specfun.hpp"

namespace pdcsq {

double theta_of(const DispersionModel& model, double omega, double length) {
  if (model.kind == DispersionModel::Kind::theta_direct) return omega;
  return -model.beta2 * omega * omega * length / 2.0;
}

double kappa_of(const DispersionModel& model, double omega) {
  if (model.kind == DispersionModel::Kind::theta_direct) return 0.0;
  return model.tau_g * omega;
}

ABPair exact_AB(const PumpCrystalConfig& cfg, double theta) {
  cfg.validate();
  const auto [c, s] = specfun::entire_cosh_sinhc(cfg.g * cfg.g - theta * theta);
  const cplx carrier = std::polar(1.0, theta);
  return {carrier * cplx(c, -theta * s), carrier * std::polar(cfg.g * s, cfg.phi)};
}

BogoliubovPair exact_UV(const PumpCrystalConfig& cfg, double theta, double kappa) {
  const auto [A, B] = exact_AB(cfg, theta);
  const cplx phase_plus = std::polar(1.0, kappa - theta);
  const cplx phase_minus = std::polar(1.0, -kappa - theta);
  return {A * phase_plus, B * phase_plus, A * phase_minus, B * phase_minus};
}

BogoliubovPair exact_UV(const PumpCrystalConfig& cfg, const DispersionModel& model, double omega) {
  return exact_UV(cfg, theta_of(model, omega, cfg.length), kappa_of(model, omega));
}

SqueezingParams squeezing_params(const BogoliubovPair& p) {
  const double defect_plus = std::norm(p.U_plus) - std::norm(p.V_plus) - 1.0;
  const double defect_minus = std::norm(p.U_minus) - std::norm(p.V_minus) - 1.0;
  if (std::abs(defect_plus) > kUnitarityTolerance || std::abs(defect_minus) > kUnitarityTolerance) {
    std::ostringstream msg;
    msg << "Bogoliubov pair violates |U|^2-|V|^2=1 (defects " << defect_plus << ", "
        << defect_minus << ")";
    throw PdcError(msg.str());
  }
  const cplx cross = p.U_plus * p.V_minus - p.U_minus * p.V_plus;
  if (std::abs(cross) > kUnitarityTolerance * (1.0 + std::abs(p.U_plus * p.V_minus))) {
    throw PdcError("Bogoliubov pair violates U(W)/V(W) = U(-W)/V(-W)");
  }

  SqueezingParams out;
  out.kappa = 0.5 * std::arg(p.U_plus / p.U_minus);
  if (p.V_plus == cplx{} || p.V_minus == cplx{}) {
    out.angles = SqueezingParams::Angles::indeterminate;
  } else {
    // ln(|U|+|V|) written as asinh|V| (equal when |U|^2-|V|^2=1) to keep
    // relative precision at small r
    out.r = std::asinh(std::abs(p.V_plus));
    out.psi_L = 0.5 * std::arg(p.U_plus * p.V_minus);
  }
  out.psi_0 = input_angle_branch(out.psi_L, out.kappa, std::arg(p.U_plus));
  return out;
}

double input_angle_branch(double psi_L, double kappa, double arg_U_plus) {
  return std::remainder(psi_L + kappa - arg_U_plus, 2.0 * std::numbers::pi);
}

double squeezing_spectrum(double r) { return std::exp(-2.0 * r); }

GridTooCoarse::GridTooCoarse(double from, double to)
    : PdcError([&] {
        std::ostringstream msg;
        msg << "angle grid too coarse to unwrap between theta=" << from << " and theta=" << to;
        return msg.str();
      }()),
      theta_from(from),
      theta_to(to) {}

namespace {

constexpr double kQuarterTurn = std::numbers::pi / 2.0;

// Walks the determinate points in `order`, fixing the branch of each one
// relative to the already-corrected points before it.
void continue_branch(const std::vector<AnglePoint>& grid, const std::vector<std::size_t>& order,
                     std::vector<double>& out) {
  for (std::size_t n = 1; n < order.size(); ++n) {
    const std::size_t prev = order[n - 1];
    const std::size_t cur = order[n];
    double predicted = out[prev];
    if (n >= 2) {
      const std::size_t prev2 = order[n - 2];
      const double slope = (out[prev] - out[prev2]) / (grid[prev].theta - grid[prev2].theta);
      predicted += slope * (grid[cur].theta - grid[prev].theta);
    }
    const double raw = *grid[cur].psi;
    const double branch = std::round((predicted - raw) / kQuarterTurn);
    out[cur] = raw + branch * kQuarterTurn;
    if (std::abs(out[cur] - out[prev]) >= kQuarterTurn / 2.0) {
      throw GridTooCoarse(std::min(grid[prev].theta, grid[cur].theta),
                          std::max(grid[prev].theta, grid[cur].theta));
    }
  }
}

}  // namespace

std::vector<double> unwrap_angle(const std::vector<AnglePoint>& grid) {
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i].theta > grid[i - 1].theta)) {
      throw PdcError("unwrap_angle: grid must be strictly ascending in theta");
    }
  }
  std::vector<double> out(grid.size(), 0.0);
  std::vector<std::size_t> defined;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i].psi) defined.push_back(i);
  }
  if (defined.empty()) return out;

  std::size_t anchor_pos = 0;
  for (std::size_t n = 1; n < defined.size(); ++n) {
    if (grid[defined[n]].r > grid[defined[anchor_pos]].r) anchor_pos = n;
  }
  out[defined[anchor_pos]] = *grid[defined[anchor_pos]].psi;

  const std::vector<std::size_t> forward(defined.begin() + static_cast<std::ptrdiff_t>(anchor_pos),
                                         defined.end());
  std::vector<std::size_t> backward(defined.begin(),
                                    defined.begin() + static_cast<std::ptrdiff_t>(anchor_pos) + 1);
  std::reverse(backward.begin(), backward.end());
  continue_branch(grid, forward, out);
  continue_branch(grid, backward, out);

  // Indeterminate points: linear interpolation between determinate neighbours.
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i].psi) continue;
    const auto right = std::lower_bound(defined.begin(), defined.end(), i);
    if (right == defined.begin()) {
      out[i] = out[*right];
    } else if (right == defined.end()) {
      out[i] = out[defined.back()];
    } else {
      const std::size_t hi = *right;
      const std::size_t lo = *(right - 1);
      const double w = (grid[i].theta - grid[lo].theta) / (grid[hi].theta - grid[lo].theta);
      out[i] = (1.0 - w) * out[lo] + w * out[hi];
    }
  }
  return out;
}

}  // namespace pdcsq
