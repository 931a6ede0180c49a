#include "rrm/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "rrm/errors.hpp"

namespace rrm::analytic {
namespace {

using std::numbers::pi;
using specfun::wfun_scaled;

constexpr double kDegenerateSeparation = 1e-9;
constexpr double kRealnessTolerance = 1e-10;

struct Cubic {
  double c2, c1, c0;  // x^3 - c2 x^2 + c1 x - c0

  [[nodiscard]] double eval(double x) const { return ((x - c2) * x + c1) * x - c0; }
  [[nodiscard]] double deriv(double x) const { return (3.0 * x - 2.0 * c2) * x + c1; }
  [[nodiscard]] Complex eval(Complex x) const { return ((x - c2) * x + c1) * x - c0; }
  [[nodiscard]] Complex deriv(Complex x) const { return (3.0 * x - 2.0 * c2) * x + c1; }
};

Cubic cubic_for(const DimensionlessParams& p) {
  const double c = 1.0 + p.kf / (4.0 * pi);
  return {c, p.kb - p.kd, p.kb - p.kd * c};
}

// Safeguarded Newton on a sign-changing bracket.
double real_root(const Cubic& q) {
  const double bound = 1.0 + std::max({std::abs(q.c2), std::abs(q.c1), std::abs(q.c0)});
  double lo = -bound, hi = bound;  // q(lo) < 0 < q(hi)
  double x = hi;
  for (int it = 0; it < 200; ++it) {
    const double f = q.eval(x);
    if (f == 0.0) return x;
    if (f < 0.0) lo = x; else hi = x;
    const double d = q.deriv(x);
    double next = (d != 0.0) ? x - f / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) return next;
    x = next;
    if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi)))
      break;
  }
  return x;
}

template <class T>
T polish(const Cubic& q, T x) {
  for (int it = 0; it < 3; ++it) {
    const T d = q.deriv(x);
    if (std::abs(d) == 0.0) break;
    const T step = q.eval(x) / d;
    if (!(std::abs(step) < 1e-3 * (1.0 + std::abs(x)))) break;
    x -= step;
  }
  return x;
}

bool sort_desc(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

void check_realness(Complex sum, double scale) {
  const double floor = 1e-15 * scale;
  if (std::abs(sum.imag()) > kRealnessTolerance * std::max(std::abs(sum.real()), floor)) {
    std::ostringstream msg;
    msg << "imaginary residue " << sum.imag() << " too large for value " << sum.real();
    throw ConvergenceError(msg.str());
  }
}

void require_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("t' must be finite and > 0");
}

DimensionlessParams nudged(const DimensionlessParams& p) {
  DimensionlessParams q = p;
  q.kd += 1e-9 * std::max(p.kd, 1.0);
  return q;
}

// -sum_i a_i W(n, a_i sqrt t) / prod_{j!=i}(a_i - a_j), times exp(-kd t).
Complex cir_root_sum(const std::array<Complex, 3>& a, double n, double t, double kd, double* scale) {
  const double st = std::sqrt(t);
  Complex sum = 0.0;
  double mag = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Complex& ai = a[i];
    const Complex& aj = a[(i + 1) % 3];
    const Complex& ak = a[(i + 2) % 3];
    const Complex term = -ai * wfun_scaled(Complex{n, 0.0}, ai * st, Complex{-kd * t, 0.0}) /
                         ((ai - aj) * (ai - ak));
    sum += term;
    mag += std::abs(term);
  }
  if (scale) *scale = mag;
  return sum;
}

Evaluation cir_irreversible_eval(double t, const DimensionlessParams& p, double n) {
  const double prefactor = p.kf / (4.0 * pi * p.r0);
  const double c = 1.0 + p.kf / (4.0 * pi);
  const double st = std::sqrt(t);
  const double b = std::sqrt(p.kd);
  const double ls = -p.kd * t;
  const double wa = wfun_scaled(n, c * st, ls);
  const double wb = wfun_scaled(n, b * st, ls);
  const double wg = wfun_scaled(n, -b * st, ls);
  const double s = -c * wa / ((c - b) * (c + b)) + wb / (2.0 * (c - b)) + wg / (2.0 * (c + b));
  return {prefactor * s, 0.0, Branch::irreversible};
}

}  // namespace

CubicRoots solve_roots(const DimensionlessParams& p) {
  if (std::isnan(p.kf) || p.kf < 0.0) throw DomainError("kf' must be >= 0");
  if (!std::isfinite(p.kf)) throw DomainError("roots are unbounded for kf' = inf");
  const Cubic q = cubic_for(p);
  const double r = polish(q, real_root(q));
  // Deflate: x^3 - c2 x^2 + c1 x - c0 = (x - r)(x^2 + b x + e).
  const double b = r - q.c2;
  const double e = q.c1 + r * b;
  const double disc = b * b - 4.0 * e;
  std::array<Complex, 3> z;
  z[0] = r;
  if (disc >= 0.0) {
    const double s = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    z[1] = polish(q, s);
    z[2] = (s != 0.0) ? polish(q, e / s) : 0.0;
  } else {
    Complex w{-0.5 * b, 0.5 * std::sqrt(-disc)};
    w = polish(q, w);
    z[1] = w;
    z[2] = std::conj(w);
  }
  std::sort(z.begin(), z.end(), sort_desc);
  CubicRoots out{z[0], z[1], z[2]};
  out.min_separation = std::min({std::abs(z[0] - z[1]), std::abs(z[0] - z[2]), std::abs(z[1] - z[2])});
  out.degenerate = out.min_separation < kDegenerateSeparation;
  return out;
}

VietaResiduals vieta_residuals(const CubicRoots& r, const DimensionlessParams& p) {
  const Cubic q = cubic_for(p);
  const Complex s1 = r.alpha + r.beta + r.gamma;
  const Complex s2 = r.alpha * r.beta + r.alpha * r.gamma + r.beta * r.gamma;
  const Complex s3 = r.alpha * r.beta * r.gamma;
  return {std::abs(s1 - q.c2) / (1.0 + std::abs(q.c2)), std::abs(s2 - q.c1) / (1.0 + std::abs(q.c1)),
          std::abs(s3 - q.c0) / (1.0 + std::abs(q.c0))};
}

EtaConstants eta_constants(const CubicRoots& r) {
  if (r.degenerate) throw DomainError("eta constants are singular for coalesced roots");
  const auto a = r.as_array();
  std::array<Complex, 3> eta;
  for (int i = 0; i < 3; ++i) {
    const Complex& ai = a[i];
    const Complex& aj = a[(i + 1) % 3];
    const Complex& ak = a[(i + 2) % 3];
    eta[i] = ai * (ai + aj) * (ai + ak) / ((aj - ai) * (ak - ai));
  }
  return {eta[0], eta[1], eta[2]};
}

Evaluation greens_function_detail(double r, double t, const DimensionlessParams& p) {
  p.validate();
  require_time(t);
  if (!(r >= 1.0) || !std::isfinite(r)) throw DomainError("r' must be finite and >= 1");
  const double st = std::sqrt(t);
  const double near = r - p.r0;
  const double far = r + p.r0 - 2.0;
  const double ls = -p.kd * t;
  const double norm = 1.0 / (8.0 * pi * r * p.r0 * std::sqrt(pi * t));
  const double img_near = norm * std::exp(ls - near * near / (4.0 * t));
  const double img_far = norm * std::exp(ls - far * far / (4.0 * t));
  const double n = far / (2.0 * st);

  if (std::isinf(p.kf)) {
    const Branch b = p.kd > 0.0 ? Branch::absorbing_degrading : Branch::absorbing;
    return {img_near - img_far, 0.0, b};
  }
  if (p.kf == 0.0 || p.kb == 0.0) {
    // Only the root c carries weight; with kf' = 0 this is the reflecting sphere.
    const double c = 1.0 + p.kf / (4.0 * pi);
    const double w = wfun_scaled(n, c * st, ls);
    const Branch b = p.kf == 0.0 ? Branch::inert : Branch::irreversible;
    return {img_near + img_far - c * w / (4.0 * pi * r * p.r0), 0.0, b};
  }

  DimensionlessParams q = p;
  CubicRoots roots = solve_roots(q);
  Branch branch = Branch::general;
  if (roots.degenerate) {
    q = nudged(p);
    roots = solve_roots(q);
    branch = Branch::perturbed;
    if (roots.degenerate) throw ConvergenceError("root coalescence persists after kd' perturbation");
  }
  const EtaConstants eta = eta_constants(roots);
  const auto a = roots.as_array();
  const std::array<Complex, 3> e{eta.eta1, eta.eta2, eta.eta3};
  const double ls_q = -q.kd * t;
  Complex sum = 0.0;
  double scale = img_near + img_far;
  for (int i = 0; i < 3; ++i) {
    const Complex term = e[i] * wfun_scaled(Complex{n, 0.0}, a[i] * st, Complex{ls_q, 0.0}) /
                         (4.0 * pi * r * p.r0);
    sum += term;
    scale += std::abs(term);
  }
  const double img_scale = std::exp(ls_q - ls);  // images use the nudged kd' too
  const Complex total = (img_near + img_far) * img_scale - sum;
  check_realness(total, scale);
  return {total.real(), std::abs(total.imag()), branch};
}

double greens_function(double r, double t, const DimensionlessParams& p) {
  return greens_function_detail(r, t, p).value;
}

Evaluation cir_detail(double t, const DimensionlessParams& p) {
  p.validate();
  require_time(t);
  if (p.kf == 0.0) return {0.0, 0.0, Branch::inert};
  if (std::isinf(p.kf)) {
    if (p.kd > 0.0) return {cir_irreversible_degrading(t, p.kd, p.r0), 0.0, Branch::absorbing_degrading};
    return {cir_irreversible(t, p.r0), 0.0, Branch::absorbing};
  }
  const double n = (p.r0 - 1.0) / (2.0 * std::sqrt(t));
  const double prefactor = p.kf / (4.0 * pi * p.r0);
  Evaluation ev;
  if (p.kb == 0.0 && std::abs(1.0 + p.kf / (4.0 * pi) - std::sqrt(p.kd)) >= kDegenerateSeparation) {
    ev = cir_irreversible_eval(t, p, n);
  } else {
    DimensionlessParams q = p;
    CubicRoots roots = solve_roots(q);
    ev.branch = Branch::general;
    if (roots.degenerate) {
      q = nudged(p);
      roots = solve_roots(q);
      ev.branch = Branch::perturbed;
      if (roots.degenerate) throw ConvergenceError("root coalescence persists after kd' perturbation");
    }
    double scale = 0.0;
    const Complex s = prefactor * cir_root_sum(roots.as_array(), n, t, q.kd, &scale);
    check_realness(s, prefactor * scale);
    ev.value = s.real();
    ev.imag_residue = std::abs(s.imag());
  }
  ev.value = std::clamp(ev.value, 0.0, 1.0);
  return ev;
}

double cir(double t, const DimensionlessParams& p) { return cir_detail(t, p).value; }

double cir_irreversible_degrading(double t, double kd, double r0) {
  require_time(t);
  if (!(kd >= 0.0) || !std::isfinite(kd)) throw DomainError("kd' must be finite and >= 0");
  if (!(r0 > 1.0)) throw DomainError("r0' must be > 1");
  const double st = std::sqrt(t);
  const double n = (r0 - 1.0) / (2.0 * st);
  const double m = std::sqrt(kd) * st;
  const double v = (wfun_scaled(n, m, -kd * t) + wfun_scaled(n, -m, -kd * t)) / (2.0 * r0);
  return std::clamp(v, 0.0, 1.0);
}

double cir_irreversible(double t, double r0) {
  require_time(t);
  if (!(r0 > 1.0)) throw DomainError("r0' must be > 1");
  return std::erfc((r0 - 1.0) / (2.0 * std::sqrt(t))) / r0;
}

double cir_asymptote(const DimensionlessParams& p) {
  p.validate();
  if (p.kb != 0.0 || p.kd != 0.0) throw DomainError("asymptote requires kb' = kd' = 0");
  if (std::isinf(p.kf)) return 1.0 / p.r0;
  return p.kf / (p.kf + 4.0 * pi) / p.r0;
}

SignalCurve expected_signal(std::span<const double> grid, const DimensionlessParams& p, bool prepend_zero) {
  p.validate();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw DomainError("time grid must be > 0");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw DomainError("time grid must be strictly increasing");
  }
  SignalCurve curve;
  curve.meta = p;
  curve.times.reserve(grid.size() + 1);
  curve.values.reserve(grid.size() + 1);
  if (prepend_zero) {
    curve.times.push_back(0.0);
    curve.values.push_back(0.0);
  }
  bool perturbed = false;
  for (double t : grid) {
    const Evaluation ev = cir_detail(t, p);
    perturbed |= ev.branch == Branch::perturbed;
    curve.times.push_back(t);
    curve.values.push_back(p.molecules * ev.value);
  }
  if (perturbed) {
    std::ostringstream note;
    note << "kd' perturbed by " << 1e-9 * std::max(p.kd, 1.0) << " to separate coalesced roots";
    curve.notes.push_back(note.str());
  }
  return curve;
}

}  // namespace rrm::analytic
