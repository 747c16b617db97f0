#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "pdcsq/commands.hpp"
#include "pdcsq/magnus.hpp"
#include "pdcsq/validation.hpp"

using namespace pdcsq;
using namespace pdcsq::commands;
using std::numbers::pi;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream l(line);
    std::string cell;
    while (std::getline(l, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

double cell(const std::vector<std::vector<std::string>>& rows, std::size_t r, const std::string& col) {
  for (std::size_t c = 0; c < rows[0].size(); ++c) {
    if (rows[0][c] == col) return std::stod(rows[r][c]);
  }
  FAIL("missing column " << col);
  return 0.0;
}

}  // namespace

TEST_CASE("run config validation") {
  RunConfig cfg;
  CHECK(cfg.validate().empty());
  CHECK(cfg.theta_grid().size() == 2001);
  cfg.g = pi;
  CHECK(cfg.validate().size() == 1);
  cfg.g = -0.1;
  CHECK_THROWS_AS((void)cfg.validate(), PdcError);
  cfg = {};
  cfg.theta_points = 1;
  CHECK_THROWS_AS((void)cfg.validate(), PdcError);
  cfg = {};
  cfg.theta_min = 1.0;
  cfg.theta_max = 1.0;
  CHECK_THROWS_AS((void)cfg.validate(), PdcError);

  GainSweepConfig sweep;
  CHECK(sweep.validate().size() == 1);  // default range reaches pi
  sweep.g_max = 3.0;
  CHECK(sweep.validate().empty());
  sweep.g_points = 1;
  CHECK_THROWS_AS((void)sweep.validate(), PdcError);
}

TEST_CASE("number formatting and solution lists") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(-2.0) == "-2");
  CHECK(parse_solutions("exact,ma3,exact") == std::vector<Solution>{Solution::exact, Solution::ma3});
  CHECK_THROWS_AS((void)parse_solutions("exact,ma4"), PdcError);
  CHECK_THROWS_AS((void)parse_solutions(""), PdcError);
}

TEST_CASE("spectrum CSV") {
  RunConfig cfg;
  cfg.solutions = {Solution::exact, Solution::ma1, Solution::ma2, Solution::ma3};
  const std::string text = spectrum_csv(cfg);
  const auto rows = parse_csv(text);
  CHECK(rows[0] == std::vector<std::string>{"theta", "s_exact", "psi_exact", "s_ma1", "psi_ma1", "s_ma2",
                                            "psi_ma2", "s_ma3", "psi_ma3", "gamma_real"});
  CHECK(rows.size() == 2002);
  CHECK(text.find('\r') == std::string::npos);
  CHECK(text.back() == '\n');

  // theta = 0 is the middle row of the default grid
  CHECK(cell(rows, 1001, "theta") == 0.0);
  CHECK(std::abs(cell(rows, 1001, "s_exact") - std::exp(-3.68)) < 1e-15);
  CHECK(cell(rows, 1001, "psi_exact") == 0.0);

  double prev = -1e9;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const double th = cell(rows, r, "theta");
    CHECK(th > prev);
    prev = th;
    CHECK(cell(rows, r, "gamma_real") == (std::abs(th) < 1.84 ? 1.0 : 0.0));
  }

  RunConfig at_pi;
  at_pi.solutions = {Solution::ma1};
  at_pi.theta_min = pi;
  at_pi.theta_max = 4.0;
  at_pi.theta_points = 2;
  const auto r2 = parse_csv(spectrum_csv(at_pi));
  CHECK(std::abs(cell(r2, 1, "s_ma1") - 1.0) < 1e-15);
}

TEST_CASE("homodyne CSV") {
  RunConfig cfg;
  cfg.g = 0.7;
  cfg.theta_points = 201;
  auto rows = parse_csv(homodyne_csv(cfg, {}));
  CHECK(rows[0] == std::vector<std::string>{"theta", "noise_exact", "gamma_real"});
  CHECK(std::abs(cell(rows, 101, "noise_exact") - std::exp(-1.4)) < 1e-12);

  cfg.g = 1.84;
  rows = parse_csv(homodyne_csv(cfg, {}));
  CHECK(std::abs(cell(rows, 101, "noise_exact") - std::exp(-3.68)) < 1e-12);

  cfg.g = 0.0;
  cfg.solutions = {Solution::exact, Solution::ma2};
  rows = parse_csv(homodyne_csv(cfg, {}));
  for (std::size_t r = 1; r < rows.size(); ++r) {
    CHECK(cell(rows, r, "noise_exact") == 1.0);
    CHECK(cell(rows, r, "noise_ma2") == 1.0);
    CHECK(cell(rows, r, "gamma_real") == 0.0);
  }
}

TEST_CASE("gain sweep CSV") {
  GainSweepConfig cfg;
  auto rows = parse_csv(gain_sweep_csv(cfg));
  CHECK(rows[0] == std::vector<std::string>{"g", "r_exact", "r_ma1", "r_ma2", "r_ma3"});
  CHECK(rows.size() == 202);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    CHECK(std::abs(cell(rows, r, "r_ma1") - cell(rows, r, "g") * 2 / pi) < 1e-14);
  }

  cfg.theta = 0.0;
  cfg.g_max = 3.0;
  rows = parse_csv(gain_sweep_csv(cfg));
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const double g = cell(rows, r, "g");
    for (const char* c : {"r_exact", "r_ma1", "r_ma2", "r_ma3"}) CHECK(std::abs(cell(rows, r, c) - g) < 1e-12);
  }

  GainSweepConfig one;
  one.g_min = 1.0;
  one.g_max = 1.84;
  one.g_points = 2;
  one.solutions = {Solution::exact};
  rows = parse_csv(gain_sweep_csv(one));
  CHECK(std::abs(cell(rows, 2, "r_exact") - 1.5023419880967366) < 1e-14);
}

TEST_CASE("taylor table") {
  auto rows = parse_csv(taylor_table(1.0, TaylorParameter::psi_L));
  CHECK(rows[0][0] == "k");
  CHECK(rows[0].size() == 13);
  CHECK(rows.size() == 5);
  CHECK(std::abs(cell(rows, 1, "exact") - -0.5) < 1e-12);
  CHECK(cell(rows, 1, "exact_reference") == -0.5);

  rows = parse_csv(taylor_table(1.0, TaylorParameter::r));
  CHECK(rows.size() == 5);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    for (const char* s : {"exact", "ma1", "ma2", "ma3"}) {
      const std::string name(s);
      const double est = cell(rows, r, name);
      const double ref = cell(rows, r, name + "_reference");
      const double unc = cell(rows, r, name + "_uncertainty");
      CHECK(std::abs(est - ref) <= std::max(1e-6, 10 * unc));
    }
    if (cell(rows, r, "k") >= 2) CHECK(cell(rows, r, "ma1_reference") == 0.0);
  }
}

TEST_CASE("outputs are deterministic") {
  RunConfig cfg;
  cfg.solutions = {Solution::exact, Solution::ma3};
  cfg.theta_points = 301;
  CHECK(spectrum_csv(cfg) == spectrum_csv(cfg));
  CHECK(homodyne_csv(cfg, {}) == homodyne_csv(cfg, {}));
  GainSweepConfig sweep;
  sweep.g_points = 31;
  CHECK(gain_sweep_csv(sweep) == gain_sweep_csv(sweep));
  CHECK(taylor_table(2.0, TaylorParameter::r) == taylor_table(2.0, TaylorParameter::r));
}

TEST_CASE("quick validation passes and catches corrupted closed forms") {
  const auto good = run_validation(ValidationLevel::quick);
  for (const auto& c : good.checks) {
    CAPTURE(c.name);
    CHECK(c.passed);
    CHECK(c.measured < c.threshold);
  }
  CHECK(good.all_passed());

  auto broken = ClosedForms::shipped();
  broken.exact_S_tilde = [](const PumpCrystalConfig& cfg, double theta, double kappa) {
    return exact_S_tilde(cfg, -theta + 1e-3, kappa);
  };
  CHECK_FALSE(run_validation(ValidationLevel::quick, broken).all_passed());

  broken = ClosedForms::shipped();
  broken.magnus_term = [](int k, const PumpCrystalConfig& cfg, double theta) {
    return k == 3 ? Matrix4c(1.001 * magnus_term(k, cfg, theta)) : magnus_term(k, cfg, theta);
  };
  CHECK_FALSE(run_validation(ValidationLevel::quick, broken).all_passed());
}
