#include "gaudin/observables.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "gaudin/constants.hpp"
#include "gaudin/errors.hpp"

namespace gaudin::obs {

namespace {

nystrom::GridSpec grid_for(double kappa, const SolverConfig& cfg) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw DomainError("kappa must be positive and finite");
  }
  return nystrom::build_grid(2.0 / kappa, cfg.nodes_per_panel, cfg.panel_width);
}

double gamma_from_m0(Statistics statistics, double kappa, double m0) {
  if (statistics == Statistics::Fermi) {
    const double q = kappa * m0 / (2.0 * kPi);
    return 0.5 * kappa / q;
  }
  return 4.0 * kPi / m0;
}

}  // namespace

ObservablePoint from_solution(const nystrom::Solution& sol) {
  ObservablePoint p;
  p.statistics = sol.statistics;
  p.kappa = sol.kappa;
  p.r = sol.r;
  p.moment0 = sol.moment0;
  p.moment2 = sol.moment2;
  p.Q = sol.kappa * sol.moment0 / (2.0 * kPi);
  p.gamma = gamma_from_m0(sol.statistics, sol.kappa, sol.moment0);
  const double ratio = sol.moment2 / (sol.moment0 * sol.moment0 * sol.moment0);
  p.energy = (sol.statistics == Statistics::Fermi ? 1.0 : 16.0) * kPi * kPi * ratio;
  p.err_estimate = sol.err_estimate / sol.moment0;
  return p;
}

ObservablePoint observe(Statistics statistics, double kappa, const SolverConfig& cfg) {
  const auto grid = grid_for(kappa, cfg);
  return from_solution(nystrom::solve(statistics, grid.r, grid));
}

double charge_Q(double kappa, const SolverConfig& cfg) {
  return observe(Statistics::Fermi, kappa, cfg).Q;
}

double gamma_of_kappa(double kappa, const SolverConfig& cfg) {
  return observe(Statistics::Fermi, kappa, cfg).gamma;
}

double energy_fermi(double kappa, const SolverConfig& cfg) {
  return observe(Statistics::Fermi, kappa, cfg).energy;
}

std::pair<double, double> energy_bose(double kappa, const SolverConfig& cfg) {
  const auto p = observe(Statistics::Bose, kappa, cfg);
  return {p.gamma, p.energy};
}

double energy_fermi_unscaled(const nystrom::UnscaledSolution& sol) {
  const double gamma_over_kappa = kPi / (2.0 * sol.moment0);
  return 2.0 / kPi * std::pow(gamma_over_kappa, 3) * sol.moment2;
}

double gamma_fast(Statistics statistics, double kappa, const SolverConfig& cfg) {
  const auto grid = grid_for(kappa, cfg);
  const auto values = nystrom::solve_values(statistics, grid);
  return gamma_from_m0(statistics, kappa, nystrom::moments(grid, values).first);
}

double kappa_of_gamma(double gamma_target, Statistics statistics, const SolverConfig& cfg) {
  if (!(gamma_target > 0.0) || !std::isfinite(gamma_target)) {
    throw DomainError("kappa_of_gamma: gamma must be positive");
  }
  const auto g = [&](double kappa) { return gamma_fast(statistics, kappa, cfg); };

  // Fermi: pi/4 < gamma/kappa < pi/2. Bose: gamma/kappa < pi, upper end
  // found by expansion.
  double lo = 0.0;
  double hi = 0.0;
  if (statistics == Statistics::Fermi) {
    lo = 0.99 * 2.0 * gamma_target / kPi;
    hi = 1.01 * 4.0 * gamma_target / kPi;
  } else {
    lo = gamma_target / kPi;
    hi = 2.0 * lo;
    while (hi < kKappaMax && g(std::min(hi, kKappaMax)) < gamma_target) hi *= 4.0;
  }
  lo = std::max(lo, kKappaMin);
  hi = std::min(hi, kKappaMax);
  if (!(lo < hi)) throw InversionError("kappa_of_gamma: target outside reachable range");

  constexpr int kProbe = 5;
  std::array<double, kProbe> probe{};
  for (int i = 0; i < kProbe; ++i) {
    const double kappa =
        i == kProbe - 1 ? hi : lo * std::pow(hi / lo, static_cast<double>(i) / (kProbe - 1));
    probe[i] = g(kappa);
    if (i > 0 && !(probe[i] > probe[i - 1])) {
      throw InversionError("kappa_of_gamma: kappa -> gamma not increasing on bracket");
    }
  }
  if (!(probe.front() <= gamma_target && gamma_target <= probe.back())) {
    throw InversionError("kappa_of_gamma: target " + std::to_string(gamma_target) +
                         " outside reachable range");
  }

  const auto residual = [&](double kappa) { return g(kappa) - gamma_target; };
  std::uintmax_t max_iter = 100;
  const auto [a, b] = boost::math::tools::toms748_solve(
      residual, lo, hi, probe.front() - gamma_target, probe.back() - gamma_target,
      boost::math::tools::eps_tolerance<double>(50), max_iter);
  const double kappa = 0.5 * (a + b);
  if (std::abs(residual(kappa)) > 1e-10 * gamma_target) {
    throw InversionError("kappa_of_gamma: root finder did not reach 1e-10 in gamma");
  }
  return kappa;
}

}  // namespace gaudin::obs
