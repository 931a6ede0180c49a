#include "rrm/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace rrm::specfun {
namespace {

using std::numbers::pi;
constexpr double kInvSqrtPi = std::numbers::inv_sqrtpi;

// Rational expansion in (L + i z)/(L - i z) of w(z), accurate in the upper
// half plane away from infinity (Weideman's method, N = 40 terms).
constexpr int kTerms = 40;

struct WeidemanTable {
  double L;
  std::array<double, kTerms> a;  // highest power first
};

WeidemanTable make_table() {
  constexpr int M = 2 * kTerms;
  WeidemanTable tab{};
  tab.L = std::sqrt(kTerms / std::numbers::sqrt2);
  std::array<double, M> f{};  // f(k) for k = 0..M-1, even in k
  for (int k = 0; k < M; ++k) {
    const double theta = k * pi / M;
    const double t = tab.L * std::tan(theta / 2.0);
    f[k] = std::exp(-t * t) * (tab.L * tab.L + t * t);
  }
  // Real DFT of the even sequence, scaled by 1/(2M).
  for (int m = 1; m <= kTerms; ++m) {
    double acc = f[0];
    for (int k = 1; k < M; ++k) acc += 2.0 * f[k] * std::cos(pi * k * m / M);
    tab.a[kTerms - m] = acc / (2.0 * M);
  }
  return tab;
}

const WeidemanTable& table() {
  static const WeidemanTable tab = make_table();
  return tab;
}

Complex weideman(Complex z) {
  const auto& tab = table();
  const Complex iz{-z.imag(), z.real()};
  const Complex denom = tab.L - iz;
  const Complex Z = (tab.L + iz) / denom;
  Complex p = tab.a[0];
  for (int k = 1; k < kTerms; ++k) p = p * Z + tab.a[k];
  return 2.0 * p / (denom * denom) + kInvSqrtPi / denom;
}

// Laplace continued fraction, good for |z| large in the upper half plane.
Complex continued_fraction(Complex z) {
  Complex r = 0.0;
  for (int k = 40; k >= 1; --k) r = (0.5 * k) / (z - r);
  return Complex{0.0, kInvSqrtPi} / (z - r);
}

// exp(x^2) with the rounding error of x*x compensated.
double exp_square(double x) {
  const double hi = x * x;
  const double lo = std::fma(x, x, -hi);
  return std::exp(hi) * (1.0 + lo);
}

Complex exp_square(Complex z) {
  if (z.imag() == 0.0) return exp_square(z.real());
  return std::exp(z * z);
}

constexpr double kMaxLog = 709.78;

}  // namespace

Complex faddeeva_upper(Complex z) {
  if (std::abs(z) > 30.0) return continued_fraction(z);
  return weideman(z);
}

ScaledErfc erfcx_checked(Complex z) {
  if (z.real() >= 0.0) {
    // erfcx(z) = w(iz), and Im(iz) = Re z >= 0.
    Complex v = faddeeva_upper(Complex{-z.imag(), z.real()});
    if (z.imag() == 0.0) v.imag(0.0);
    return {v, false};
  }
  const Complex tail = erfcx_checked(-z).value;
  const double re_sq = z.real() * z.real() - z.imag() * z.imag();
  if (re_sq > kMaxLog) {
    // 2 exp(z^2) dominates and is not representable.
    const double phase = 2.0 * z.real() * z.imag();
    const double big = std::numeric_limits<double>::max();
    return {Complex{big * std::cos(phase), big * std::sin(phase)}, true};
  }
  Complex v = 2.0 * exp_square(z) - tail;
  if (z.imag() == 0.0) v.imag(0.0);
  return {v, false};
}

Complex erfcx(Complex z) { return erfcx_checked(z).value; }

double erfcx(double x) { return erfcx_checked(Complex{x, 0.0}).value.real(); }

Complex wfun_scaled(Complex n, Complex m, Complex log_scale) {
  const Complex s = n + m;
  if (s.real() >= 0.0) return std::exp(log_scale - n * n) * erfcx(s);
  // erfc(s) = 2 - erfc(-s) moves the argument back to the right half plane.
  return 2.0 * std::exp(log_scale + 2.0 * n * m + m * m) -
         std::exp(log_scale - n * n) * erfcx(-s);
}

double wfun_scaled(double n, double m, double log_scale) {
  const double s = n + m;
  if (s >= 0.0) return std::exp(log_scale - n * n) * erfcx(s);
  return 2.0 * std::exp(log_scale + 2.0 * n * m + m * m) - std::exp(log_scale - n * n) * erfcx(-s);
}

Complex wfun(Complex n, Complex m) { return wfun_scaled(n, m, Complex{0.0, 0.0}); }

}  // namespace rrm::specfun
