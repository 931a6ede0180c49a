#include "rrm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rrm/errors.hpp"

namespace rrm::oracle {
namespace {

using Quad = __float128;

template <class C>
struct Ops;

template <>
struct Ops<Complex> {
  using Real = double;
  static Real pi() { return std::numbers::pi; }
  static Complex exp(Complex z) { return std::exp(z); }
  static Complex sqrt(Complex z) { return std::sqrt(z); }
};

template <>
struct Ops<QComplex> {
  using Real = Quad;
  static Real pi() { return acosq(Quad(-1)); }
  static QComplex exp(QComplex z) { return cexpq(z); }
  static QComplex sqrt(QComplex z) { return csqrtq(z); }
};

void check_off_cut(double re, double im, const DimensionlessParams& p) {
  if (im == 0.0 && re <= -p.kd) throw DomainError("s lies on the branch cut of sqrt(s + kd')");
}

template <class C>
C greens_transform(C s, const DimensionlessParams& p, double r) {
  using O = Ops<C>;
  using R = typename O::Real;
  const R four_pi = 4 * O::pi();
  const R rr = r, r0 = p.r0;
  const C q = O::sqrt(s + R(p.kd));
  const C near = O::exp(-q * R(std::abs(r - p.r0)));
  const C far = O::exp(-q * R(r + p.r0 - 2.0));
  const C images = (near + far) / (R(8) * O::pi() * rr * r0 * q);
  C bracket;
  if (std::isinf(p.kf)) {
    bracket = R(1);
  } else {
    const C K = s * R(p.kf) / (s + R(p.kb));
    bracket = (four_pi + K) / (four_pi * q + four_pi + K);
  }
  return images - bracket * far / (four_pi * rr * r0 * q);
}

template <class C>
C cir_transform(C s, const DimensionlessParams& p) {
  using O = Ops<C>;
  using R = typename O::Real;
  if (p.kf == 0.0) return C(R(0));
  if (std::isinf(p.kf)) {
    const C q = O::sqrt(s + R(p.kd));
    return O::exp(-q * R(p.r0 - 1.0)) / (R(p.r0) * s);
  }
  return R(p.kf) / (s + R(p.kb)) * greens_transform(s, p, 1.0);
}

QComplex make(Quad re, Quad im) {
  QComplex z;
  __real__ z = re;
  __imag__ z = im;
  return z;
}

}  // namespace

QComplex laplace_greens_q(QComplex s, const DimensionlessParams& p, double r) {
  return greens_transform(s, p, r);
}

QComplex laplace_cir_q(QComplex s, const DimensionlessParams& p) { return cir_transform(s, p); }

Complex laplace_greens(const LaplaceQuery& q) {
  q.params.validate();
  const double r = q.radius.value_or(1.0);
  if (!(r >= 1.0)) throw DomainError("r' must be >= 1");
  check_off_cut(q.s.real(), q.s.imag(), q.params);
  return greens_transform(q.s, q.params, r);
}

Complex laplace_cir(Complex s, const DimensionlessParams& p) {
  p.validate();
  check_off_cut(s.real(), s.imag(), p);
  return cir_transform(s, p);
}

double talbot_sum(const Transform& F, double t, int n_nodes, double distance) {
  if (!(t > 0.0)) throw DomainError("t' must be > 0");
  if (n_nodes < 2) throw DomainError("n_nodes must be >= 2");
  const Quad M = n_nodes;
  const Quad tq = t;
  Quad r = 2 * M / (5 * tq);
  const Quad saddle = Quad(distance) * Quad(distance) / (4 * tq * tq);
  if (saddle > r) r = saddle;

  const Quad pi = Ops<QComplex>::pi();
  Quad acc = crealq(F(make(r, 0))) * expq(r * tq) / 2;
  for (int k = 1; k < n_nodes; ++k) {
    const Quad theta = k * pi / M;
    const Quad cot = cosq(theta) / sinq(theta);
    const QComplex s = make(r * theta * cot, r * theta);
    const Quad sigma = theta + (theta * cot - 1) * cot;
    const QComplex term = cexpq(tq * s) * F(s) * make(1, sigma);
    acc += crealq(term);
  }
  return static_cast<double>(r / M * acc);
}

double talbot_invert(const Transform& F, double t, int n_nodes, double distance) {
  const double f = talbot_sum(F, t, n_nodes, distance);
  const double g = talbot_sum(F, t, n_nodes + n_nodes / 2, distance);
  if (!std::isfinite(f) || std::abs(f - g) > 1e-9 * (1.0 + std::abs(f))) {
    std::ostringstream msg;
    msg << "Talbot inversion not converged at t'=" << t << ": " << f << " vs " << g;
    throw ConvergenceError(msg.str());
  }
  return f;
}

double invert_cir(double t, const DimensionlessParams& p, int n_nodes) {
  p.validate();
  return talbot_invert([&p](QComplex s) { return laplace_cir_q(s, p); }, t, n_nodes, p.r0 - 1.0);
}

double invert_greens(double r, double t, const DimensionlessParams& p, int n_nodes) {
  p.validate();
  if (!(r >= 1.0)) throw DomainError("r' must be >= 1");
  return talbot_invert([&p, r](QComplex s) { return laplace_greens_q(s, p, r); }, t, n_nodes,
                       std::abs(r - p.r0));
}

}  // namespace rrm::oracle
