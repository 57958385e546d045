#pragma once

#include <complex>

namespace gaudin::specfun {

using cplx = std::complex<double>;

/// Principal branch of log Gamma(z): analytic on C \ (-inf, 0] and real on
/// the positive axis, so log_gamma(z + 1) = log_gamma(z) + log z exactly.
/// Throws DomainError at the poles z = 0, -1, -2, ...
cplx log_gamma(cplx z);

/// log Gamma(1/2 + t) - log Gamma(1/2), accurate for small |t| where the
/// plain difference loses digits. Requires Re(1/2 + t) > 0.
cplx log_gamma_half_shift(cplx t);

/// exp(z) - 1 without cancellation for small |z|.
cplx expm1(cplx z);

/// Generalized exponential integral E_a(z) = int_1^inf e^{-zt} t^{-a} dt
/// for real a >= 0 and Re z > 0 (or z = 0 with a > 1).
cplx exp_integral_E(double a, cplx z);

}  // namespace gaudin::specfun
