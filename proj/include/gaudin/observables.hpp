#pragma once

#include <cstddef>
#include <utility>

#include "gaudin/nystrom.hpp"

namespace gaudin::obs {

struct SolverConfig {
  double panel_width = 0.5;
  std::size_t nodes_per_panel = 10;
};

/// One coupling value with every derived observable. For Fermi, energy is
/// e_F(gamma) (the -gamma^2/4 binding shift is not included); for Bose it is
/// e_B(gamma). Q = (kappa/2pi) int f for both statistics.
struct ObservablePoint {
  Statistics statistics = Statistics::Fermi;
  double kappa = 0.0;
  double r = 0.0;
  double gamma = 0.0;
  double Q = 0.0;
  double energy = 0.0;
  double err_estimate = 0.0;  // relative error of int f from node doubling
  double moment0 = 0.0;
  double moment2 = 0.0;
};

/// Maps a rescaled solution to observables. Fermi: gamma = kappa/(2Q),
/// e_F = pi^2 m2 / m0^3. Bose: gamma = 4pi/m0, e_B = 16 pi^2 m2 / m0^3.
ObservablePoint from_solution(const nystrom::Solution& sol);

/// Full solve (with error estimate and invariant checks) at r = 2/kappa.
ObservablePoint observe(Statistics statistics, double kappa, const SolverConfig& cfg = {});

double charge_Q(double kappa, const SolverConfig& cfg = {});
double gamma_of_kappa(double kappa, const SolverConfig& cfg = {});
double energy_fermi(double kappa, const SolverConfig& cfg = {});
/// (gamma, e_B) from the Lieb-Liniger solution.
std::pair<double, double> energy_bose(double kappa, const SolverConfig& cfg = {});

/// e_F from the unscaled solution on (-1, 1):
/// kappa/gamma = (2/pi) int f_F, e_F = (2/pi)(gamma/kappa)^3 int x^2 f_F.
double energy_fermi_unscaled(const nystrom::UnscaledSolution& sol);

/// gamma as a function of kappa from a single solve, without the doubling
/// error estimate. Used as the root-finding target.
double gamma_fast(Statistics statistics, double kappa, const SolverConfig& cfg = {});

/// Smallest kappa the dense solver accepts (r = 2/kappa <= 1000).
inline constexpr double kKappaMin = 2e-3;
inline constexpr double kKappaMax = 1e4;

/// Inverts kappa -> gamma by bracketed root finding. The map is checked to
/// be increasing on the bracket first; InversionError if not, or if the
/// target is outside [gamma(kKappaMin), gamma(kKappaMax)].
double kappa_of_gamma(double gamma_target, Statistics statistics, const SolverConfig& cfg = {});

}  // namespace gaudin::obs
