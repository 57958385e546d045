#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gaudin/errors.hpp"
#include "gaudin/nystrom.hpp"
#include "gaudin/observables.hpp"

using namespace gaudin;
constexpr double kPi = std::numbers::pi;

TEST_CASE("charge limits") {
  CHECK(obs::charge_Q(1e3) == doctest::Approx(2 / kPi).epsilon(1e-3));
  CHECK(std::abs(obs::charge_Q(0.01) - 1 / kPi) < 0.01);
  // a value reached independently by the unscaled equation
  const auto u = nystrom::solve_unscaled(Statistics::Fermi, 0.1, nystrom::build_grid(2.0, 20, 0.05));
  CHECK(obs::charge_Q(0.1) == doctest::Approx(u.moment0 / kPi).epsilon(1e-9));
  CHECK(std::abs(obs::charge_Q(0.1) - 0.3411594) < 1e-5);
}

TEST_CASE("charge is increasing") {
  double prev = 0.0;
  for (double kappa = 0.02; kappa <= 1000.0; kappa *= 2.5) {
    const double q = obs::charge_Q(kappa);
    CHECK(q > prev);
    prev = q;
  }
}

TEST_CASE("gamma limits and the identity gamma Q = kappa/2") {
  CHECK(obs::gamma_of_kappa(1e3) / 1e3 == doctest::Approx(kPi / 4).epsilon(1e-3));
  CHECK(obs::gamma_of_kappa(0.01) / 0.01 == doctest::Approx(kPi / 2).epsilon(2e-2));
  const double expected = kPi / 100 - (std::log(50 * kPi) + 1) / 1e4;
  CHECK(obs::gamma_of_kappa(0.02) == doctest::Approx(expected).epsilon(1e-4));
  for (double kappa : {0.05, 0.7, 3.0}) {
    for (auto stat : {Statistics::Fermi, Statistics::Bose}) {
      const auto p = obs::observe(stat, kappa);
      if (stat == Statistics::Fermi) CHECK(std::abs(p.gamma * p.Q - kappa / 2) <= 1e-10 * kappa);
      CHECK(p.r == doctest::Approx(2 / kappa).epsilon(1e-15));
      CHECK(p.err_estimate <= 1e-8);
    }
  }
}

TEST_CASE("fermi energy") {
  CHECK(obs::energy_fermi(1e3) == doctest::Approx(kPi * kPi / 48).epsilon(1e-3));
  const double r = 100;
  const double expected = kPi * kPi / 12 - kPi / 200 + (std::log(50 * kPi) + 1 + kPi * kPi / 3) / 2e4;
  // neglected terms are O(r^-3 log^2 r)
  CHECK(std::abs(obs::energy_fermi(2 / r) - expected) < 3e-5);
  for (double kappa : {0.2, 1.0}) {
    const auto u =
        nystrom::solve_unscaled(Statistics::Fermi, kappa, nystrom::build_grid(2.0, 20, 0.05));
    CHECK(obs::energy_fermi_unscaled(u) == doctest::Approx(obs::energy_fermi(kappa)).epsilon(1e-8));
  }
}

TEST_CASE("bose energy") {
  const auto [g_inf, e_inf] = obs::energy_bose(1e3);
  CHECK(e_inf == doctest::Approx(kPi * kPi / 3).epsilon(1e-2));
  CHECK(g_inf / 1e3 == doctest::Approx(kPi).epsilon(1e-2));
  // self-convergence under grid doubling
  const auto [g1, e1] = obs::energy_bose(1.0);
  const auto [g2, e2] = obs::energy_bose(1.0, {0.5, 20});
  CHECK(e1 == doctest::Approx(e2).epsilon(1e-8));
  CHECK(g1 == doctest::Approx(g2).epsilon(1e-8));
  CHECK(e1 > 0);
}

TEST_CASE("kappa from gamma") {
  const double k = obs::kappa_of_gamma(kPi / 2 * 0.01, Statistics::Fermi);
  CHECK(k == doctest::Approx(0.01).epsilon(0.05));
  for (auto stat : {Statistics::Fermi, Statistics::Bose}) {
    const double kappa = obs::kappa_of_gamma(0.3, stat);
    const auto p = obs::observe(stat, kappa);
    CHECK(p.gamma == doctest::Approx(0.3).epsilon(1e-9));
    if (stat == Statistics::Fermi) CHECK(std::abs(p.gamma * p.Q - kappa / 2) <= 1e-10 * kappa);
  }
  CHECK_THROWS_AS(obs::kappa_of_gamma(1e-9, Statistics::Fermi), InversionError);
  CHECK_THROWS_AS(obs::kappa_of_gamma(1e9, Statistics::Fermi), InversionError);
}
