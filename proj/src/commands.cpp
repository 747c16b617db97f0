#include "pdcsq/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "pdcsq/magnus.hpp"
#include "pdcsq/solutions.hpp"

namespace pdcsq::commands {

namespace {

std::string convergence_warning(double g) {
  return "g = " + format_number(g) +
         " is not below pi: convergence of the Magnus series is not guaranteed";
}

}  // namespace

std::vector<std::string> RunConfig::validate() const {
  if (theta_points < 2) throw PdcError("theta-points must be >= 2");
  if (!(theta_min < theta_max)) throw PdcError("theta-min must be below theta-max");
  if (!(g >= 0.0)) throw PdcError("g must be >= 0");
  if (solutions.empty()) throw PdcError("no solutions requested");
  std::vector<std::string> warnings;
  if (!convergence_bound_ok(g)) warnings.push_back(convergence_warning(g));
  return warnings;
}

std::vector<double> RunConfig::theta_grid() const {
  return linspace(theta_min, theta_max, theta_points);
}

std::vector<std::string> GainSweepConfig::validate() const {
  if (g_points < 2) throw PdcError("g-points must be >= 2");
  if (!(g_min >= 0.0) || !(g_min < g_max)) throw PdcError("need 0 <= g-min < g-max");
  if (solutions.empty()) throw PdcError("no solutions requested");
  std::vector<std::string> warnings;
  if (!convergence_bound_ok(g_max)) warnings.push_back(convergence_warning(g_max));
  return warnings;
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<Solution> parse_solutions(const std::string& list) {
  std::vector<Solution> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const Solution s = solution_from_string(item);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  if (out.empty()) throw PdcError("empty solution list");
  return out;
}

std::string spectrum_csv(const RunConfig& cfg) {
  (void)cfg.validate();
  const std::vector<double> thetas = cfg.theta_grid();
  const PumpCrystalConfig pump{cfg.g, cfg.phi, 1.0};
  std::vector<SolutionCurve> curves;
  std::string out = "theta";
  for (Solution s : cfg.solutions) {
    curves.push_back(solution_curve(s, pump, thetas));
    out += ",s_" + to_string(s) + ",psi_" + to_string(s);
  }
  out += ",gamma_real\n";
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    out += format_number(thetas[i]);
    for (const auto& c : curves) out += "," + format_number(c.s[i]) + "," + format_number(c.psi[i]);
    out += std::abs(thetas[i]) < cfg.g ? ",1\n" : ",0\n";
  }
  return out;
}

std::string homodyne_csv(const RunConfig& cfg, const HomodyneConfig& homodyne) {
  (void)cfg.validate();
  const std::vector<double> thetas = cfg.theta_grid();
  const PumpCrystalConfig pump{cfg.g, cfg.phi, 1.0};
  std::vector<std::vector<std::pair<double, double>>> curves;
  std::string out = "theta";
  for (Solution s : cfg.solutions) {
    curves.push_back(noise_spectrum_curve(s, pump, thetas, homodyne));
    out += ",noise_" + to_string(s);
  }
  out += ",gamma_real\n";
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    out += format_number(thetas[i]);
    for (const auto& c : curves) out += "," + format_number(c[i].second);
    out += std::abs(thetas[i]) < cfg.g ? ",1\n" : ",0\n";
  }
  return out;
}

std::string gain_sweep_csv(const GainSweepConfig& cfg) {
  (void)cfg.validate();
  const GainSweep sweep = gain_sweep(cfg.theta, linspace(cfg.g_min, cfg.g_max, cfg.g_points),
                                     cfg.solutions, cfg.phi);
  std::string out = "g";
  for (Solution s : cfg.solutions) out += ",r_" + to_string(s);
  out += "\n";
  for (std::size_t i = 0; i < sweep.g_grid.size(); ++i) {
    out += format_number(sweep.g_grid[i]);
    for (Solution s : cfg.solutions) out += "," + format_number(sweep.curves.at(s)[i]);
    out += "\n";
  }
  return out;
}

std::string taylor_table(double theta, TaylorParameter parameter, double phi) {
  const std::vector<Solution> all{Solution::exact, Solution::ma1, Solution::ma2, Solution::ma3};
  const int max_order = parameter == TaylorParameter::r ? 4 : 3;
  std::vector<TaylorReport> reports;
  std::string out = "k";
  for (Solution s : all) {
    reports.push_back(taylor_extract(parameter, s, theta, max_order, phi));
    const std::string name = to_string(s);
    out += "," + name + "," + name + "_uncertainty," + name + "_reference";
  }
  out += "\n";
  for (std::size_t row = 0; row < reports.front().coefficients.size(); ++row) {
    out += std::to_string(reports.front().coefficients[row].k);
    for (const auto& rep : reports) {
      const auto& c = rep.coefficients[row];
      out += "," + format_number(c.estimate) + "," + format_number(c.uncertainty) + "," +
             format_number(c.reference);
    }
    out += "\n";
  }
  return out;
}

}  // namespace pdcsq::commands
