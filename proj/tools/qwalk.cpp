#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "qwalk/error.hpp"
#include "qwalk/run.hpp"

namespace {

constexpr int kConfigStatus = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coined quantum walk on a line: exact, spectral and long-wavelength solvers"};
  app.set_version_flag("--version", qwalk::kSolverVersion);

  std::string mode;
  double rho = 0.0;
  int steps = 0;
  double tau = 0.0;
  std::string r0 = "0.70710678118654752+0i";
  std::string l0 = "0+0.70710678118654752i";
  std::string grid;
  std::string parity;
  qwalk::RunConfig config;

  app.add_option("mode", mode, "walk | decoupled | spectral | longwave | dispersion | compare | nv")->required();
  auto* rho_opt = app.add_option("--rho", rho, "coin parameter in [0, 1]");
  auto* steps_opt = app.add_option("--steps", steps, "number of walk steps n");
  auto* tau_opt = app.add_option("--tau", tau, "continuum time (longwave)");
  app.add_option("--r0", r0, "initial R amplitude at site 0, e.g. 0.6+0.8i")->capture_default_str();
  app.add_option("--l0", l0, "initial L amplitude at site 0")->capture_default_str();
  app.add_option("--w", config.w, "Gaussian cutoff width (longwave)")->capture_default_str();
  auto* grid_opt = app.add_option("--grid", grid, "start:stop:step sample grid (longwave xi, dispersion k)");
  app.add_option("--nodes", config.nodes, "trapezoid quadrature nodes")->capture_default_str();
  auto* parity_opt =
      app.add_option("--parity", parity, "even | odd; (-1)^n for longwave (default: parity of round(tau))")
          ->check(CLI::IsMember({"even", "odd"}));
  app.add_flag("--normalize", config.normalize, "rescale longwave output to unit sum on the grid");
  app.add_flag("--verify", config.verify, "check every Airy closed-form value against direct quadrature");
  app.add_option("--out", config.out, "output CSV path, '-' for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigStatus;
  }

  try {
    config.mode = qwalk::parse_mode(mode);
    if (*rho_opt) config.rho = rho;
    if (*steps_opt) config.steps = steps;
    if (*tau_opt) config.tau = tau;
    if (*grid_opt) config.grid = qwalk::GridSpec::parse(grid);
    if (*parity_opt) config.parity = parity == "even" ? qwalk::Parity::Even : qwalk::Parity::Odd;
    config.r0 = qwalk::parse_complex(r0);
    config.l0 = qwalk::parse_complex(l0);

    const qwalk::RunResult result = qwalk::run(config);
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
    qwalk::emit_csv(result.table, config.out);
    if (!result.within_tolerance) {
      std::cerr << "error: cross-check exceeded tolerance (see max_diff metadata)\n";
      return qwalk::exit_status(qwalk::ErrorKind::NonConvergent);
    }
    return 0;
  } catch (const qwalk::Error& e) {
    std::cerr << "error [" << qwalk::to_string(e.kind()) << "]: " << e.what() << '\n';
    return qwalk::exit_status(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
