// Command-line front end: single solves, parameter sweeps and the
// verification suites.

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gaudin/cli.hpp"
#include "gaudin/verify.hpp"

namespace {

using gaudin::cli::ScaleKind;

const std::map<std::string, ScaleKind> kScales = {
    {"kappa", ScaleKind::Kappa}, {"gamma", ScaleKind::Gamma}, {"r", ScaleKind::R}};

void add_solver_flags(CLI::App* cmd, gaudin::obs::SolverConfig& cfg) {
  cmd->add_option("--panel-width", cfg.panel_width, "Nystrom panel width (<= 1)")
      ->check(CLI::Range(1e-6, 1.0));
  cmd->add_option("--nodes-per-panel", cfg.nodes_per_panel, "Gauss nodes per panel")
      ->check(CLI::Range(4, 200));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaudin / Lieb-Liniger integral equations: observables and asymptotics"};
  app.require_subcommand(1);

  gaudin::cli::SolveRequest solve;
  std::optional<double> kappa;
  std::optional<double> gamma;
  std::optional<double> r;
  auto* solve_cmd = app.add_subcommand("solve", "Solve at one coupling, print JSON");
  std::string solve_stat = "fermi";
  solve_cmd->add_option("--stat", solve_stat, "fermi or bose")
      ->check(CLI::IsMember({"fermi", "bose"}));
  solve_cmd->add_option("--kappa", kappa, "kernel parameter kappa");
  solve_cmd->add_option("--gamma", gamma, "dimensionless coupling gamma");
  solve_cmd->add_option("--r", r, "rescaled interval length 2/kappa");
  add_solver_flags(solve_cmd, solve.solver);

  gaudin::cli::SweepRequest sweep;
  std::string sweep_format = "csv";
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate observables over a range");
  std::string sweep_stat = "fermi";
  std::string sweep_scale = "kappa";
  sweep_cmd->add_option("--stat", sweep_stat, "fermi or bose")
      ->check(CLI::IsMember({"fermi", "bose"}));
  sweep_cmd->add_option("--scale", sweep_scale, "kappa, gamma or r")
      ->check(CLI::IsMember({"kappa", "gamma", "r"}));
  sweep_cmd->add_option("--min", sweep.min, "lower bound")->required();
  sweep_cmd->add_option("--max", sweep.max, "upper bound")->required();
  sweep_cmd->add_option("--points", sweep.points, "number of points (>= 2)");
  sweep_cmd->add_flag("--log", sweep.log_spaced, "logarithmic spacing");
  sweep_cmd->add_option("--out", sweep.output_path, "output file (default stdout)");
  sweep_cmd->add_option("--format", sweep_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  add_solver_flags(sweep_cmd, sweep.solver);

  std::string suite = "all";
  std::string report_path;
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
  verify_cmd->add_option("--suite", suite, "suite name")
      ->check(CLI::IsMember(gaudin::verify::suite_names()));
  verify_cmd->add_option("--out", report_path, "report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return gaudin::cli::kUsage;
  }

  if (solve_cmd->parsed()) {
    solve.statistics = gaudin::parse_statistics(solve_stat);
    solve.kappa = kappa;
    solve.gamma = gamma;
    solve.r = r;
    const int code = gaudin::cli::run_solve(solve, std::cout, std::cerr);
    if (code == gaudin::cli::kUsage) std::cerr << solve_cmd->help();
    return code;
  }
  if (sweep_cmd->parsed()) {
    sweep.statistics = gaudin::parse_statistics(sweep_stat);
    sweep.scale_kind = kScales.at(sweep_scale);
    sweep.json = sweep_format == "json";
    const int code = gaudin::cli::run_sweep(sweep, std::cout, std::cerr);
    if (code == gaudin::cli::kUsage) std::cerr << sweep_cmd->help();
    return code;
  }
  return gaudin::cli::run_verify(suite, report_path, std::cout, std::cerr);
}
