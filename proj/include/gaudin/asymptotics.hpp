#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace gaudin::asym {

/// One additive term of a closed-form expansion. `order` is the position in
/// the expansion (0 = leading). The flag records whether the term's
/// coefficient contains the Euler constant.
struct SeriesTerm {
  std::string_view label;
  int order;
  bool involves_euler_gamma;
  double (*eval)(double);
};

enum class Expansion {
  ChargeQ,      // Q(kappa)
  EnergyGamma,  // e_F(gamma)
  Moment0,      // int f (r)
  Moment2,      // int x^2 f (r)
  GammaR,       // gamma(r)
  EnergyR,      // e_F(r)
  IofX,         // I(X), X -> 0
  E1Block,      // 1 - X I(X), X -> 0
};

std::span<const SeriesTerm> terms(Expansion which);

/// Sum of the terms with order <= max_order.
double partial_sum(Expansion which, double arg, int max_order);

/// 1/pi + (kappa/2pi^2)(log 1/kappa + log pi + 1)
///      [+ (kappa^2/4pi^3)(log 1/kappa + log pi + 1/2)].  order in {1, 2}.
double q_series(double kappa, int order);

/// pi^2/12 [- gamma/2 [+ gamma^2/6]].  order in {0, 1, 2}.
double energy_series(double gamma, int order);

struct LargeRSeries {
  double m0;
  double m2;
  double gamma;
  double energy;
};

/// Large-r expansions of int f, int x^2 f, gamma and e_F.
LargeRSeries large_r_series(double r);

/// energy_series(gamma~(r), 2) - e_F~(r); O(r^{-3} log r).
double composition_residual(double r);

/// pi^2/4 + gamma_E^2/2.
double constant_C_closed();

struct QuadratureValue {
  double value;
  double error;  // |coarse - fine| under node doubling
};

/// int_0^inf [log(1+y) - (1 - e^{-y}) log y] dy / y, via y = e^t.
QuadratureValue constant_C();

/// Integrand of constant_C() in the original variable y.
double constant_C_integrand(double y);

enum class IMode { Quadrature, Series };

/// I(X) = int_0^inf e^{-Xy} log(1+y) / y dy.
/// Series: (1/2) log^2 X + gamma_E log X + C + X log X - (2 - gamma_E) X.
double I_of_X(double X, IMode mode);
QuadratureValue I_of_X_quadrature(double X);

struct E1Block {
  double series;
  double quadrature;  // 1 - X I(X)
};

E1Block e1_block(double X);

struct ResidualFit {
  std::vector<std::pair<double, double>> samples;  // (scale, residual)
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Least squares of log|residual| against log scale over the nonzero
/// residuals. Needs >= 4 samples with positive, strictly monotone scales and
/// >= 3 nonzero residuals; FitError otherwise.
ResidualFit fit_order(std::vector<std::pair<double, double>> samples);

}  // namespace gaudin::asym
