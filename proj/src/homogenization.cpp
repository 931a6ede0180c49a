#include "rrm/homogenization.hpp"

#include <cmath>
#include <numbers>

#include "rrm/errors.hpp"

namespace rrm::homog {

using std::numbers::pi;

namespace {

void require_rate(double kf) {
  if (std::isnan(kf) || kf < 0.0) throw DomainError("kf' must be >= 0");
}

}  // namespace

ReceptorLayoutParams ReceptorLayoutParams::circular(long long M, double rs) {
  ReceptorLayoutParams l{M, rs, static_cast<double>(M) * rs * rs / 4.0};
  l.validate();
  return l;
}

ReceptorLayoutParams ReceptorLayoutParams::from_mesh(long long M, long long M_max) {
  if (M_max <= 0 || M < 0 || M > M_max) throw DomainError("need 0 <= M <= M_max, M_max > 0");
  ReceptorLayoutParams l;
  l.M = M;
  l.rs = equivalent_receptor_radius(4.0 * pi / static_cast<double>(M_max));
  l.coverage_lambda = static_cast<double>(M) / static_cast<double>(M_max);
  l.validate();
  return l;
}

void ReceptorLayoutParams::validate() const {
  if (M < 0) throw DomainError("receptor count must be >= 0");
  if (!std::isfinite(rs) || rs < 0.0) throw DomainError("rs' must be finite and >= 0");
  if (M > 0 && rs <= 0.0) throw DomainError("rs' must be > 0 when M > 0");
  if (!(coverage_lambda >= 0.0)) throw DomainError("coverage must be >= 0");
  if (coverage_lambda > 1.0 + 1e-12) throw DomainError("coverage lambda exceeds 1");
}

FluxPair steady_fluxes(const ReceptorLayoutParams& layout, double kf) {
  layout.validate();
  require_rate(kf);
  FluxPair f;
  if (std::isinf(kf)) {
    f.j_sphere = 4.0 * pi;
    f.j_receptor = 4.0 * layout.rs;
  } else {
    f.j_sphere = 4.0 * pi * kf / (kf + 4.0 * pi);
    f.j_receptor = layout.rs > 0.0 ? 4.0 * layout.rs / (1.0 + 16.0 / (layout.rs * kf)) : 0.0;
  }
  return f;
}

double correction_factor(const ReceptorLayoutParams& layout, double kf) {
  layout.validate();
  require_rate(kf);
  if (std::isinf(kf)) return zwanzig_factor(layout);
  const double M = static_cast<double>(layout.M);
  const double lam = std::min(layout.coverage_lambda, 1.0);
  const double num = M * layout.rs * layout.rs * (kf + 4.0 * pi);
  const double den = (1.0 - lam) * (pi * layout.rs * kf + 16.0 * pi) + num;
  if (num == 0.0) return lam >= 1.0 ? 1.0 : 0.0;
  return num / den;
}

double effective_forward_rate(double kf, double phi) {
  require_rate(kf);
  if (!(phi >= 0.0 && phi <= 1.0)) throw DomainError("phi must lie in [0, 1]");
  if (phi == 0.0) return 0.0;
  if (phi == 1.0) return kf;
  if (std::isinf(kf)) return 4.0 * pi * phi / (1.0 - phi);
  return 4.0 * pi * kf * phi / (kf * (1.0 - phi) + 4.0 * pi);
}

double berg_purcell_factor(const ReceptorLayoutParams& layout) {
  layout.validate();
  const double x = static_cast<double>(layout.M) * layout.rs;
  return x / (pi + x);
}

double zwanzig_factor(const ReceptorLayoutParams& layout) {
  layout.validate();
  const double x = static_cast<double>(layout.M) * layout.rs;
  const double lam = std::min(layout.coverage_lambda, 1.0);
  if (x == 0.0) return lam >= 1.0 ? 1.0 : 0.0;
  return x / ((1.0 - lam) * pi + x);
}

double equivalent_receptor_radius(double triangle_area) {
  if (!(triangle_area > 0.0) || !std::isfinite(triangle_area))
    throw DomainError("triangle area must be finite and > 0");
  return std::sqrt(triangle_area / pi);
}

DimensionlessParams finite_receptor_params(const DimensionlessParams& p,
                                           const ReceptorLayoutParams& layout) {
  p.validate();
  DimensionlessParams out = p;
  out.kf = effective_forward_rate(p.kf, correction_factor(layout, p.kf));
  return out;
}

}  // namespace rrm::homog
