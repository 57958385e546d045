#include "gaudin/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/zeta.hpp>

#include "gaudin/constants.hpp"
#include "gaudin/errors.hpp"

namespace gaudin::specfun {

namespace {

constexpr double kStirlingShift = 15.0;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

// B_{2k} / (2k (2k - 1)), k = 1..9
constexpr std::array<double, 9> kStirling = {
    1.0 / 12.0,         -1.0 / 360.0,       1.0 / 1260.0,
    -1.0 / 1680.0,      1.0 / 1188.0,       -691.0 / 360360.0,
    1.0 / 156.0,        -3617.0 / 122400.0, 43867.0 / 244188.0};

cplx stirling(cplx z) {
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx tail = 0.0;
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) {
    tail = tail * inv2 + *it;
  }
  return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + tail * inv;
}

bool is_gamma_pole(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// c_n = psi^{(n-1)}(1/2) / n!, so log Gamma(1/2 + t) = log sqrt(pi) + sum c_n t^n.
constexpr int kHalfSeriesTerms = 40;

const std::array<double, kHalfSeriesTerms + 1>& half_series() {
  static const auto coeffs = [] {
    std::array<double, kHalfSeriesTerms + 1> c{};
    c[1] = -kEulerGamma - 2.0 * std::numbers::ln2;
    for (int n = 2; n <= kHalfSeriesTerms; ++n) {
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      c[n] = sign * (std::ldexp(1.0, n) - 1.0) *
             boost::math::zeta(static_cast<double>(n)) / n;
    }
    return c;
  }();
  return coeffs;
}

cplx series_small(double a, cplx z) {
  // E_a(z) = Gamma(1-a) z^{a-1} - sum_k (-z)^k / (k! (1 - a + k)), with the
  // log form when a is a positive integer.
  const double rounded = std::round(a);
  const bool integer = (a == rounded) && a >= 1.0;
  cplx sum = 0.0;
  cplx term = 1.0;  // (-z)^k / k!
  const int n = static_cast<int>(rounded);
  for (int k = 0; k < 200; ++k) {
    if (k > 0) term *= -z / static_cast<double>(k);
    cplx add;
    if (integer && k == n - 1) {
      double digamma = -kEulerGamma;
      for (int j = 1; j < n; ++j) digamma += 1.0 / j;
      add = -term * (-std::log(z) + digamma);
    } else {
      add = term / (1.0 - a + k);
    }
    sum -= add;
    if (k > n + 2 && std::abs(add) < 1e-17 * std::abs(sum)) break;
  }
  if (!integer) {
    sum += std::exp(log_gamma(cplx(1.0 - a, 0.0)) + (a - 1.0) * std::log(z));
  }
  return sum;
}

cplx continued_fraction(double a, cplx z) {
  // Modified Lentz evaluation of e^{-z} / (z + a - 1 a/(z + a + 2 - ...)).
  constexpr double tiny = 1e-300;
  cplx b = z + a;
  cplx c = 1.0 / tiny;
  cplx d = 1.0 / b;
  cplx h = d;
  for (int i = 1; i < 5000; ++i) {
    const double an = -static_cast<double>(i) * (a - 1.0 + i);
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const cplx del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) return h * std::exp(-z);
  }
  throw AccuracyError("exp_integral_E: continued fraction did not converge");
}

}  // namespace

cplx log_gamma(cplx z) {
  if (is_gamma_pole(z)) {
    throw DomainError("log_gamma: pole of Gamma at z = " + std::to_string(z.real()));
  }
  cplx shift = 0.0;
  while (z.real() < kStirlingShift) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

cplx log_gamma_half_shift(cplx t) {
  if (std::abs(t) > 0.1) {
    return log_gamma(0.5 + t) - 0.5 * std::log(kPi);
  }
  const auto& c = half_series();
  cplx sum = 0.0;
  for (int n = kHalfSeriesTerms; n >= 1; --n) sum = (sum + c[n]) * t;
  return sum;
}

cplx expm1(cplx z) {
  const double x = z.real();
  const double y = z.imag();
  const double s = std::sin(0.5 * y);
  const double re = std::expm1(x) * std::cos(y) - 2.0 * s * s;
  const double im = std::exp(x) * std::sin(y);
  return {re, im};
}

cplx exp_integral_E(double a, cplx z) {
  if (!(a >= 0.0) || !std::isfinite(a)) {
    throw DomainError("exp_integral_E: order must be >= 0");
  }
  if (z == cplx(0.0, 0.0)) {
    if (a > 1.0) return 1.0 / (a - 1.0);
    throw DivergenceError("exp_integral_E: E_a(0) diverges for a <= 1");
  }
  if (!(z.real() > 0.0)) {
    throw DomainError("exp_integral_E: requires Re z > 0");
  }
  if (a == 0.0) return std::exp(-z) / z;
  if (std::abs(z) < 1.0) return series_small(a, z);
  return continued_fraction(a, z);
}

}  // namespace gaudin::specfun
