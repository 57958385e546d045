#include <cmath>
#include <complex>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/expint.hpp>

#include "doctest.h"
#include "gaudin/errors.hpp"
#include "gaudin/specfun.hpp"

using namespace gaudin;
using specfun::cplx;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

// E_a(z) = int_1^inf e^{-zt} t^{-a} dt, real and imaginary parts separately.
cplx expint_quadrature(double a, cplx z) {
  boost::math::quadrature::exp_sinh<double> q;
  auto part = [&](bool imag) {
    return q.integrate([&](double s) {
      const double t = 1.0 + s;
      const cplx v = std::exp(-z * t) * std::pow(t, -a);
      return imag ? v.imag() : v.real();
    });
  };
  return {part(false), part(true)};
}

}  // namespace

TEST_CASE("log_gamma special values") {
  CHECK(std::abs(specfun::log_gamma(1.0)) < 1e-15);
  CHECK(specfun::log_gamma(0.5).real() == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-14));
  CHECK(specfun::log_gamma(5.0).real() == doctest::Approx(std::log(24.0)).epsilon(1e-15));
  CHECK(std::abs(specfun::log_gamma(5.0).imag()) == 0.0);
}

TEST_CASE("log_gamma matches lgamma on the positive axis") {
  for (double x = 0.01; x < 60.0; x *= 1.37) {
    CHECK(specfun::log_gamma(x).real() == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
  }
}

TEST_CASE("log_gamma recurrence and reflection off the axis") {
  int n = 0;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j, ++n) {
      const cplx z{-4.7 + 1.1 * i, -9.5 + 2.1 * j};
      const cplx step = specfun::log_gamma(z + 1.0) - specfun::log_gamma(z) - std::log(z);
      CHECK(std::abs(step) < 1e-12);
      // Gamma(z) Gamma(1 - z) sin(pi z) = pi
      if (std::abs(z.imag()) < 5.0) {
        const cplx prod = std::exp(specfun::log_gamma(z) + specfun::log_gamma(1.0 - z)) *
                          std::sin(std::numbers::pi * z);
        CHECK(std::abs(prod - std::numbers::pi) < 1e-11 * std::abs(prod));
      }
    }
  }
  CHECK(n == 100);
}

TEST_CASE("log_gamma poles") {
  CHECK_THROWS_AS(specfun::log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(specfun::log_gamma(-3.0), DomainError);
}

TEST_CASE("log_gamma_half_shift agrees with the plain difference") {
  const cplx base = specfun::log_gamma(0.5);
  for (cplx t : {cplx{0.3, 0.2}, cplx{-0.05, 0.08}, cplx{0.0, 1.5}, cplx{2.0, -3.0}}) {
    const cplx direct = specfun::log_gamma(0.5 + t) - base;
    CHECK(std::abs(specfun::log_gamma_half_shift(t) - direct) < 1e-13 * (1 + std::abs(direct)));
  }
  // tiny t: first-order term -(gamma_E + 2 log 2) t
  const cplx t{1e-9, 2e-9};
  const cplx lin = -(std::numbers::egamma + 2 * std::numbers::ln2) * t;
  CHECK(std::abs(specfun::log_gamma_half_shift(t) - lin) < 1e-16);
}

TEST_CASE("complex expm1") {
  const cplx z{1e-10, -3e-11};
  CHECK(rel(specfun::expm1(z), z + 0.5 * z * z) < 1e-15);
  const cplx w{0.7, 2.0};
  CHECK(rel(specfun::expm1(w), std::exp(w) - 1.0) < 1e-15);
}

TEST_CASE("exponential integral examples") {
  CHECK(std::abs(specfun::exp_integral_E(2.0, 0.0) - 1.0) < 1e-15);
  CHECK(specfun::exp_integral_E(1.0, 1.0).real() == doctest::Approx(0.21938393439552029).epsilon(1e-14));
  CHECK_THROWS_AS(specfun::exp_integral_E(1.0, 0.0), DivergenceError);
  CHECK_THROWS_AS(specfun::exp_integral_E(0.5, 0.0), DivergenceError);
  CHECK_THROWS_AS(specfun::exp_integral_E(1.0, -1.0), DomainError);
  CHECK_THROWS_AS(specfun::exp_integral_E(-1.0, 1.0), DomainError);
}

TEST_CASE("exponential integral against boost for integer order") {
  for (unsigned n : {1u, 2u, 3u, 5u}) {
    for (double x : {1e-3, 0.2, 0.9, 1.0, 1.3, 4.0, 25.0}) {
      const double ref = boost::math::expint(n, x);
      CHECK(specfun::exp_integral_E(n, x).real() == doctest::Approx(ref).epsilon(1e-12));
    }
  }
}

TEST_CASE("exponential integral against direct quadrature") {
  for (double a : {0.0, 0.5, 1.0, 2.5, 4.0}) {
    for (cplx z : {cplx{0.3, 0.0}, cplx{0.5, 0.5}, cplx{2.0, -1.0}, cplx{6.0, 3.0}, cplx{0.05, 0.9}}) {
      CHECK(rel(specfun::exp_integral_E(a, z), expint_quadrature(a, z)) < 1e-9);
    }
  }
}

TEST_CASE("exponential integral recurrence") {
  // a E_{a+1}(z) = e^{-z} - z E_a(z)
  for (double a : {0.5, 1.0, 1.7, 3.0}) {
    for (cplx z : {cplx{0.4, 0.1}, cplx{1.0, 0.0}, cplx{3.0, -2.0}}) {
      const cplx lhs = a * specfun::exp_integral_E(a + 1, z);
      const cplx rhs = std::exp(-z) - z * specfun::exp_integral_E(a, z);
      CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs) + 1e-15);
    }
  }
}
