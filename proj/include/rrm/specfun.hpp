#pragma once

#include <complex>

namespace rrm::specfun {

using Complex = std::complex<double>;

/// erfcx value plus a flag raised when exp(z^2) overflowed and the
/// result was clamped to the largest finite magnitude.
struct ScaledErfc {
  Complex value;
  bool saturated = false;
};

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz) for Im z >= 0.
Complex faddeeva_upper(Complex z);

/// exp(z^2) erfc(z) on the whole complex plane.
ScaledErfc erfcx_checked(Complex z);
Complex erfcx(Complex z);
double erfcx(double x);

/// W(n, m) = exp(2nm + m^2) erfc(n + m), evaluated without forming the
/// exponential factor on its own when it would overflow.
Complex wfun(Complex n, Complex m);

/// exp(log_scale) * W(n, m) with the scale folded into the exponents, so a
/// small prefactor can cancel a large W without intermediate overflow.
Complex wfun_scaled(Complex n, Complex m, Complex log_scale);
double wfun_scaled(double n, double m, double log_scale);

}  // namespace rrm::specfun
