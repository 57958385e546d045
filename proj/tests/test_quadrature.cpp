#include <cmath>
#include <numeric>

#include "doctest.h"
#include "gaudin/errors.hpp"
#include "gaudin/quadrature.hpp"

using namespace gaudin;

TEST_CASE("gauss-legendre rule integrates polynomials of degree 2n-1") {
  for (std::size_t n : {2u, 5u, 10u, 20u, 40u}) {
    const auto& rule = quad::gauss_legendre(n);
    REQUIRE(rule.nodes.size() == n);
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(rule.nodes[k] == -rule.nodes[n - 1 - k]);
      CHECK(rule.weights[k] == rule.weights[n - 1 - k]);
    }
    for (std::size_t deg = 0; deg < 2 * n; ++deg) {
      double sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) sum += rule.weights[k] * std::pow(rule.nodes[k], deg);
      const double exact = deg % 2 ? 0.0 : 2.0 / (deg + 1.0);
      CHECK(sum == doctest::Approx(exact).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(quad::gauss_legendre(1), UsageError);
}

TEST_CASE("panel integration") {
  const auto breaks = quad::uniform_breaks(0.0, 3.0, 6);
  CHECK(breaks.size() == 7);
  CHECK(breaks.back() == 3.0);
  const double v = quad::integrate_panels<double>([](double x) { return std::exp(-x); }, breaks, 10);
  CHECK(v == doctest::Approx(1.0 - std::exp(-3.0)).epsilon(1e-14));
}

TEST_CASE("graded breaks resolve a log singularity") {
  const auto breaks = quad::graded_breaks(1.0, 0.5, 1e-14);
  CHECK(breaks.front() == 0.0);
  CHECK(breaks.back() == 1.0);
  CHECK(std::is_sorted(breaks.begin(), breaks.end()));
  const double v = quad::integrate_panels<double>([](double x) { return std::log(x); }, breaks, 12);
  CHECK(v == doctest::Approx(-1.0).epsilon(1e-12));
}
