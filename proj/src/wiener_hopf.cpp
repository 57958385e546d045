#include "gaudin/wiener_hopf.hpp"

#include <algorithm>
#include <cmath>

#include "gaudin/constants.hpp"
#include "gaudin/errors.hpp"
#include "gaudin/quadrature.hpp"
#include "gaudin/specfun.hpp"

namespace gaudin::wh {

namespace {

const double kLog2Pi = std::log(2.0 * kPi);
constexpr cplx kI{0.0, 1.0};

// sigma_minus(-ix) = sigma_plus(ix) for x > 0: the common real value
// sqrt(pi) exp{(x/2pi)(log x - log 2pi - 1)} / Gamma(1/2 + x/2pi).
double sigma_on_imaginary_axis(double x) {
  if (x == 0.0) return 1.0;
  const double t = x / (2.0 * kPi);
  const double log_value =
      t * (std::log(x) - kLog2Pi - 1.0) - specfun::log_gamma_half_shift(t).real();
  return std::exp(log_value);
}

}  // namespace

double sigma(double xi) { return 0.5 * (1.0 + std::exp(-std::abs(xi))); }

double g_hat(double xi, double r) {
  const double arg = 0.5 * r * xi;
  if (std::abs(arg) < 1e-4) {
    // 2 sin(a)/xi with a = r xi / 2, Taylor in a.
    const double a2 = arg * arg;
    return r * (1.0 - a2 / 6.0 + a2 * a2 / 120.0);
  }
  return 2.0 * std::sin(arg) / xi;
}

cplx log_sigma_plus(cplx xi) {
  if (xi.imag() < 0.0) throw DomainError("sigma_plus: requires Im xi >= 0");
  if (xi == cplx(0.0, 0.0)) return 0.0;
  const cplx t = xi / (2.0 * kPi * kI);
  return t * (std::log(-kI * xi) - kLog2Pi - 1.0) - specfun::log_gamma_half_shift(t);
}

cplx log_sigma_minus(cplx xi) {
  if (xi.imag() > 0.0) throw DomainError("sigma_minus: requires Im xi <= 0");
  if (xi == cplx(0.0, 0.0)) return 0.0;
  const cplx u = -xi / (2.0 * kPi * kI);
  return u * (std::log(kI * xi) - kLog2Pi - 1.0) - specfun::log_gamma_half_shift(u);
}

cplx sigma_plus(cplx xi) { return std::exp(log_sigma_plus(xi)); }

cplx sigma_minus(cplx xi) { return std::exp(log_sigma_minus(xi)); }

cplx g_plus_rational_part(cplx xi) {
  if (xi == cplx(0.0, 0.0)) {
    throw DomainError("G_plus: logarithmic singularity at xi = 0");
  }
  return kI / xi * specfun::expm1(-log_sigma_plus(xi));
}

double psi(double x) {
  if (!(x > 0.0) || !(x < kPi)) {
    throw DomainError("psi: requires 0 < x < pi");
  }
  return sigma_on_imaginary_axis(x) * std::tan(0.5 * x) / kPi;
}

double phi(double y) {
  if (!(y > 0.0) || !(y < kPi)) {
    throw DomainError("phi: requires 0 < y < pi");
  }
  const double s = sigma_on_imaginary_axis(y);
  return -s * s * std::tan(0.5 * y) / kPi;
}

WienerHopfContext::WienerHopfContext(double r, double x_max, std::size_t quad_points)
    : r_(r), x_max_(x_max), quad_points_(quad_points) {
  if (!(r > 0.0)) throw DomainError("WienerHopfContext: r must be positive");
  if (!(x_max > 0.0) || x_max > kPi / 2 + 1e-15) {
    throw DomainError("WienerHopfContext: x_max must lie in (0, pi/2]");
  }
  if (quad_points < 32) throw DomainError("WienerHopfContext: quad_points must be >= 32");
}

GPlusValue G_plus_estimate(cplx xi, const WienerHopfContext& ctx) {
  if (!(xi.imag() > 0.0)) throw DomainError("G_plus: requires Im xi > 0");
  if (ctx.r() < 10.0) throw DomainError("G_plus: requires r >= 10");

  const double r = ctx.r();
  const auto damped = [r, xi](double x) -> cplx {
    // psi(x)/x, finite at 0 with limit 1/2pi.
    const double psi_over_x =
        sigma_on_imaginary_axis(x) * (std::tan(0.5 * x) / x) / kPi;
    return std::exp(-r * x) * psi_over_x / (x - kI * xi);
  };
  const double smallest =
      1e-12 * std::min({ctx.x_max(), std::abs(xi), 1.0 / r});
  const auto breaks = quad::graded_breaks(ctx.x_max(), 0.5, smallest);
  const std::size_t n = ctx.quad_points();
  const cplx coarse = quad::integrate_panels<cplx>(damped, breaks, n);
  const cplx fine = quad::integrate_panels<cplx>(damped, breaks, 2 * n);

  const cplx value = g_plus_rational_part(xi) - fine;
  const double scale = std::max(std::abs(value), std::abs(fine));
  const double rel = std::abs(fine - coarse) / scale;
  if (rel > 1e-6) {
    throw AccuracyError("G_plus: quadrature not converged under node doubling");
  }
  return {value, rel};
}

cplx G_plus(cplx xi, const WienerHopfContext& ctx) {
  return G_plus_estimate(xi, ctx).value;
}

}  // namespace gaudin::wh
