#pragma once

#include <complex>
#include <cstddef>
#include <numbers>

namespace gaudin::wh {

using cplx = std::complex<double>;

/// Fourier symbol of the kernel delta/2 + (1/2pi)/(x^2+1).
double sigma(double xi);

/// Fourier transform of the indicator of (-r/2, r/2).
double g_hat(double xi, double r);

/// Wiener-Hopf factors of sigma, sigma_minus * sigma_plus = sigma on the real
/// axis. sigma_plus lives on Im xi >= 0, sigma_minus on Im xi <= 0; both
/// throw DomainError outside their closed half-plane.
cplx sigma_plus(cplx xi);
cplx sigma_minus(cplx xi);

/// log sigma_plus(xi), principal logs throughout. log_sigma_plus(0) = 0.
cplx log_sigma_plus(cplx xi);
cplx log_sigma_minus(cplx xi);

/// (i/xi)(1/sigma_plus(xi) - 1), evaluated without cancellation near 0.
cplx g_plus_rational_part(cplx xi);

/// psi(x) = (1/pi) sigma_minus(-ix) tan(x/2), 0 < x < pi.
double psi(double x);

/// phi(y) = -(1/pi) sigma_plus(iy)^2 tan(y/2), 0 < y < pi.
double phi(double y);

class WienerHopfContext {
 public:
  explicit WienerHopfContext(double r, double x_max = std::numbers::pi / 2,
                             std::size_t quad_points = 32);

  double r() const { return r_; }
  double x_max() const { return x_max_; }
  std::size_t quad_points() const { return quad_points_; }

 private:
  double r_;
  double x_max_;
  std::size_t quad_points_;
};

struct GPlusValue {
  cplx value;
  double rel_error;  // |I(2n) - I(n)| / |G|
};

/// G^+(xi) = (i/xi)(1/sigma_plus(xi) - 1)
///           - int_0^{x_max} e^{-rx} psi(x)/x dx/(x - i xi),   Im xi > 0.
/// Throws AccuracyError when node doubling moves the integral by more than
/// 1e-6 relative.
GPlusValue G_plus_estimate(cplx xi, const WienerHopfContext& ctx);
cplx G_plus(cplx xi, const WienerHopfContext& ctx);

}  // namespace gaudin::wh
