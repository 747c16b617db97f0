// Command-line front end: reproduces the spectral, homodyne, gain-sweep and
// Taylor-coefficient data as CSV and runs the oracle validation suite.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "pdcsq/commands.hpp"
#include "pdcsq/magnus.hpp"
#include "pdcsq/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;

int emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return kExitUsage;
  }
  out << text;
  if (!out.flush()) {
    std::cerr << "error: failed writing '" << path << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

pdcsq::ClosedForms faulty_forms(const std::string& fault) {
  auto forms = pdcsq::ClosedForms::shipped();
  if (fault == "exact") {
    forms.exact_S_tilde = [](const pdcsq::PumpCrystalConfig& cfg, double theta, double kappa) {
      return pdcsq::exact_S_tilde(cfg, -theta, kappa);
    };
  } else if (fault == "magnus-term") {
    forms.magnus_term = [](int k, const pdcsq::PumpCrystalConfig& cfg, double theta) {
      const pdcsq::Matrix4c m = pdcsq::magnus_term(k, cfg, theta);
      return k == 2 ? pdcsq::Matrix4c(-m) : m;
    };
  }
  return forms;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace pdcsq;
  CLI::App app{"Broadband squeezing from type-I PDC with a monochromatic pump"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file; flags override it");

  commands::RunConfig run;
  std::string solutions = "exact";
  std::string out_path;
  bool lock_lo = false;
  double beta = 0.0;
  commands::GainSweepConfig sweep;
  std::string sweep_solutions = "exact,ma1,ma2,ma3";
  double taylor_theta = 1.0;
  std::string taylor_parameter = "r";
  std::string level = "quick";
  std::string fault;

  app.add_option("--g", run.g, "Gain exponent g = |sigma| L")->capture_default_str();
  app.add_option("--phi", run.phi, "Pump coupling phase")->capture_default_str();
  app.add_option("--theta-min", run.theta_min, "Lower end of the theta grid")->capture_default_str();
  app.add_option("--theta-max", run.theta_max, "Upper end of the theta grid")->capture_default_str();
  app.add_option("--theta-points", run.theta_points, "Number of theta samples")->capture_default_str();
  app.add_option("--solutions", solutions, "Comma list from exact,ma1,ma2,ma3");
  app.add_option("--out", out_path, "Output file (default: stdout)");
  auto* lock_opt = app.add_flag("--lock-lo", lock_lo,
                                "Lock the LO so that psi_L - beta = pi/2 at theta = 0 (default)");
  app.add_option("--beta", beta, "Fixed LO phase instead of the lock")->excludes(lock_opt);
  app.add_option("--theta", taylor_theta, "Fixed theta for gain-sweep and taylor");
  app.add_option("--g-min", sweep.g_min, "Gain sweep start")->capture_default_str();
  app.add_option("--g-max", sweep.g_max, "Gain sweep end")->capture_default_str();
  app.add_option("--g-points", sweep.g_points, "Gain sweep samples")->capture_default_str();
  app.add_option("--parameter", taylor_parameter, "Taylor parameter: r or psi_L")
      ->check(CLI::IsMember({"r", "psi_L"}));
  app.add_option("--level", level, "Validation level")->check(CLI::IsMember({"quick", "full"}));
  app.add_option("--inject-fault", fault, "Corrupt a closed form (validator self-test)")
      ->check(CLI::IsMember({"exact", "magnus-term"}))
      ->group("");

  auto* spectrum = app.add_subcommand("spectrum", "Squeezing spectrum and continuous angle vs theta");
  auto* homodyne = app.add_subcommand("homodyne", "Homodyne photocurrent noise spectrum vs theta");
  auto* gain = app.add_subcommand("gain-sweep", "Squeezing parameter r vs gain at fixed theta");
  auto* taylor = app.add_subcommand("taylor", "Taylor coefficients in g of r or psi_L");
  auto* validate = app.add_subcommand("validate", "Cross-check closed forms against oracles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) {
      const auto report = run_validation(
          level == "full" ? ValidationLevel::full : ValidationLevel::quick, faulty_forms(fault));
      for (const auto& c : report.checks) {
        std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << ": "
                  << commands::format_number(c.measured) << " < "
                  << commands::format_number(c.threshold) << "\n";
      }
      return report.all_passed() ? kExitOk : kExitValidation;
    }

    if (taylor->parsed()) {
      return emit(commands::taylor_table(taylor_theta, taylor_parameter == "r"
                                                           ? TaylorParameter::r
                                                           : TaylorParameter::psi_L,
                                         run.phi),
                  out_path);
    }

    if (gain->parsed()) {
      sweep.theta = app.count("--theta") ? taylor_theta : std::numbers::pi / 2.0;
      sweep.phi = run.phi;
      sweep.solutions =
          commands::parse_solutions(app.count("--solutions") ? solutions : sweep_solutions);
      print_warnings(sweep.validate());
      return emit(commands::gain_sweep_csv(sweep), out_path);
    }

    run.solutions = commands::parse_solutions(solutions);
    print_warnings(run.validate());
    if (spectrum->parsed()) return emit(commands::spectrum_csv(run), out_path);
    if (homodyne->parsed()) {
      HomodyneConfig h;
      if (app.count("--beta")) {
        h.lock = HomodyneConfig::Lock::fixed_beta;
        h.beta = beta;
      }
      return emit(commands::homodyne_csv(run, h), out_path);
    }
  } catch (const PdcError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
