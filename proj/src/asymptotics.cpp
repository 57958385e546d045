#include "gaudin/asymptotics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "gaudin/constants.hpp"
#include "gaudin/errors.hpp"
#include "gaudin/quadrature.hpp"

namespace gaudin::asym {

namespace {

constexpr double kPi2 = kPi * kPi;
constexpr double kPi3 = kPi2 * kPi;
constexpr double kEg = kEulerGamma;

double log_pr2(double r) { return std::log(kPi * r / 2.0); }
double log_q(double kappa) { return -std::log(kappa) + std::log(kPi); }

constexpr std::array kChargeQ = {
    SeriesTerm{"1/pi", 0, false, [](double) { return 1.0 / kPi; }},
    SeriesTerm{"(k/2pi^2)(log 1/k + log pi + 1)", 1, false,
               [](double k) { return k / (2.0 * kPi2) * (log_q(k) + 1.0); }},
    SeriesTerm{"(k^2/4pi^3)(log 1/k + log pi + 1/2)", 2, false,
               [](double k) { return k * k / (4.0 * kPi3) * (log_q(k) + 0.5); }},
};

constexpr std::array kEnergyGamma = {
    SeriesTerm{"pi^2/12", 0, false, [](double) { return kPi2 / 12.0; }},
    SeriesTerm{"-g/2", 1, false, [](double g) { return -0.5 * g; }},
    SeriesTerm{"g^2/6", 2, false, [](double g) { return g * g / 6.0; }},
};

constexpr std::array kMoment0 = {
    SeriesTerm{"r", 0, false, [](double r) { return r; }},
    SeriesTerm{"(1/pi)[L + 1]", 1, false, [](double r) { return (log_pr2(r) + 1.0) / kPi; }},
    SeriesTerm{"(1/pi^2 r)[L + 1/2]", 2, false,
               [](double r) { return (log_pr2(r) + 0.5) / (kPi2 * r); }},
};

constexpr std::array kMoment2 = {
    SeriesTerm{"r^3/12", 0, false, [](double r) { return r * r * r / 12.0; }},
    SeriesTerm{"(r^2/4pi)[L - 1]", 1, false,
               [](double r) { return r * r / (4.0 * kPi) * (log_pr2(r) - 1.0); }},
    SeriesTerm{"(r/4pi^2)[L^2 - L - 5/2 + 2pi^2/3]", 2, false,
               [](double r) {
                 const double l = log_pr2(r);
                 return r / (4.0 * kPi2) * (l * l - l - 2.5 + 2.0 * kPi2 / 3.0);
               }},
};

constexpr std::array kGammaR = {
    SeriesTerm{"pi/r", 0, false, [](double r) { return kPi / r; }},
    SeriesTerm{"-(1/r^2)[L + 1]", 1, false,
               [](double r) { return -(log_pr2(r) + 1.0) / (r * r); }},
};

constexpr std::array kEnergyR = {
    SeriesTerm{"pi^2/12", 0, false, [](double) { return kPi2 / 12.0; }},
    SeriesTerm{"-pi/2r", 1, false, [](double r) { return -kPi / (2.0 * r); }},
    SeriesTerm{"(1/2r^2)[L + 1 + pi^2/3]", 2, false,
               [](double r) { return (log_pr2(r) + 1.0 + kPi2 / 3.0) / (2.0 * r * r); }},
};

constexpr std::array kIofX = {
    SeriesTerm{"(1/2) log^2 X", 0, false,
               [](double x) { return 0.5 * std::log(x) * std::log(x); }},
    SeriesTerm{"gE log X", 0, true, [](double x) { return kEg * std::log(x); }},
    SeriesTerm{"C", 0, true, [](double) { return kPi2 / 4.0 + 0.5 * kEg * kEg; }},
    SeriesTerm{"X log X", 1, false, [](double x) { return x * std::log(x); }},
    SeriesTerm{"-(2 - gE) X", 1, true, [](double x) { return -(2.0 - kEg) * x; }},
};

constexpr std::array kE1Block = {
    SeriesTerm{"1", 0, false, [](double) { return 1.0; }},
    SeriesTerm{"-[(1/2) log^2 X + gE log X + pi^2/4 + gE^2/2] X", 1, true,
               [](double x) {
                 const double l = std::log(x);
                 return -(0.5 * l * l + kEg * l + kPi2 / 4.0 + 0.5 * kEg * kEg) * x;
               }},
    SeriesTerm{"-[log X - 2 + gE] X^2", 2, true,
               [](double x) { return -(std::log(x) - 2.0 + kEg) * x * x; }},
};

// Integrand of C after y = e^t; dy/y = dt.
double c_integrand_log(double t) {
  const double y = std::exp(t);
  if (t <= 0.0) return std::log1p(y) + std::expm1(-y) * t;
  return std::log1p(1.0 / y) + std::exp(-y) * t;
}

}  // namespace

std::span<const SeriesTerm> terms(Expansion which) {
  switch (which) {
    case Expansion::ChargeQ: return kChargeQ;
    case Expansion::EnergyGamma: return kEnergyGamma;
    case Expansion::Moment0: return kMoment0;
    case Expansion::Moment2: return kMoment2;
    case Expansion::GammaR: return kGammaR;
    case Expansion::EnergyR: return kEnergyR;
    case Expansion::IofX: return kIofX;
    case Expansion::E1Block: return kE1Block;
  }
  throw UsageError("unknown expansion");
}

double partial_sum(Expansion which, double arg, int max_order) {
  double sum = 0.0;
  for (const auto& term : terms(which)) {
    if (term.order <= max_order) sum += term.eval(arg);
  }
  return sum;
}

double q_series(double kappa, int order) {
  if (order != 1 && order != 2) throw UsageError("q_series: order must be 1 or 2");
  return partial_sum(Expansion::ChargeQ, kappa, order);
}

double energy_series(double gamma, int order) {
  if (order < 0 || order > 2) throw UsageError("energy_series: order must be 0, 1 or 2");
  return partial_sum(Expansion::EnergyGamma, gamma, order);
}

LargeRSeries large_r_series(double r) {
  return {partial_sum(Expansion::Moment0, r, 2), partial_sum(Expansion::Moment2, r, 2),
          partial_sum(Expansion::GammaR, r, 1), partial_sum(Expansion::EnergyR, r, 2)};
}

double composition_residual(double r) {
  const auto s = large_r_series(r);
  return energy_series(s.gamma, 2) - s.energy;
}

double constant_C_closed() { return kPi2 / 4.0 + 0.5 * kEg * kEg; }

double constant_C_integrand(double y) {
  if (!(y > 0.0)) throw DomainError("constant_C_integrand: requires y > 0");
  return c_integrand_log(std::log(y)) / y;
}

QuadratureValue constant_C() {
  const auto breaks = quad::uniform_breaks(-40.0, 40.0, 80);
  const double coarse = quad::integrate_panels<double>(c_integrand_log, breaks, 20);
  const double fine = quad::integrate_panels<double>(c_integrand_log, breaks, 40);
  const double err = std::abs(fine - coarse);
  if (err > 1e-9) throw AccuracyError("constant_C: quadrature not converged");
  return {fine, err};
}

QuadratureValue I_of_X_quadrature(double X) {
  if (!(X > 0.0) || !std::isfinite(X)) throw DomainError("I_of_X: requires X > 0");
  const auto f = [X](double y) {
    const double base = y < 1e-8 ? 1.0 - 0.5 * y : std::log1p(y) / y;
    return std::exp(-X * y) * base;
  };
  const double y_max = std::max(2.0, 50.0 / X);
  std::vector<double> breaks{0.0, 0.5, 1.0};
  for (double y = 1.5; y < y_max; y *= 1.5) breaks.push_back(y);
  breaks.push_back(y_max);

  const double coarse = quad::integrate_panels<double>(f, breaks, 30);
  const double fine = quad::integrate_panels<double>(f, breaks, 60);
  const double err = std::abs(fine - coarse);
  if (err > 1e-9 * std::max(1.0, std::abs(fine))) {
    throw AccuracyError("I_of_X: quadrature not converged");
  }
  return {fine, err};
}

double I_of_X(double X, IMode mode) {
  if (mode == IMode::Quadrature) return I_of_X_quadrature(X).value;
  if (!(X > 0.0) || X > 1.0) throw DomainError("I_of_X series: requires 0 < X <= 1");
  return partial_sum(Expansion::IofX, X, 1);
}

E1Block e1_block(double X) {
  if (!(X > 0.0) || X > 1.0) throw DomainError("e1_block: requires 0 < X <= 1");
  return {partial_sum(Expansion::E1Block, X, 2), 1.0 - X * I_of_X_quadrature(X).value};
}

ResidualFit fit_order(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 4) throw FitError("fit_order: need at least 4 samples");
  bool increasing = true;
  bool decreasing = true;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!(samples[i].first > 0.0) || !std::isfinite(samples[i].first)) {
      throw FitError("fit_order: scales must be positive");
    }
    if (!std::isfinite(samples[i].second)) throw FitError("fit_order: residual not finite");
    if (i > 0) {
      increasing = increasing && samples[i].first > samples[i - 1].first;
      decreasing = decreasing && samples[i].first < samples[i - 1].first;
    }
  }
  if (!increasing && !decreasing) throw FitError("fit_order: scales must be strictly monotone");

  std::vector<double> lx;
  std::vector<double> ly;
  for (const auto& [s, rho] : samples) {
    if (rho != 0.0) {
      lx.push_back(std::log(s));
      ly.push_back(std::log(std::abs(rho)));
    }
  }
  if (lx.size() < 3) throw FitError("fit_order: need at least 3 nonzero residuals");

  const auto n = static_cast<double>(lx.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }

  ResidualFit fit;
  fit.samples = std::move(samples);
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  const double ss_res = syy - fit.slope * sxy;
  fit.r_squared = syy > 0.0 ? 1.0 - std::max(0.0, ss_res) / syy : 1.0;
  return fit;
}

}  // namespace gaudin::asym
