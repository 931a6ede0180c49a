#include "rrm/units.hpp"

#include <cmath>
#include <string>

#include "rrm/errors.hpp"

namespace rrm {
namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw DomainError(std::string(name) + " must be finite");
}

void require_nonnegative_rate(double v, const char* name) {
  if (std::isnan(v) || v < 0.0) throw DomainError(std::string(name) + " must be >= 0");
}

}  // namespace

void SystemParams::validate() const {
  require_finite(receiver_radius, "receiver_radius");
  require_finite(release_distance, "release_distance");
  require_finite(diffusion, "diffusion");
  require_finite(kf, "kf");
  require_finite(kb, "kb");
  require_finite(kd, "kd");
  require_finite(ref_count, "ref_count");
  if (receiver_radius <= 0.0) throw DomainError("receiver_radius must be > 0");
  if (release_distance <= receiver_radius)
    throw DomainError("release_distance must exceed receiver_radius");
  if (diffusion <= 0.0) throw DomainError("diffusion must be > 0");
  require_nonnegative_rate(kf, "kf");
  require_nonnegative_rate(kb, "kb");
  require_nonnegative_rate(kd, "kd");
  if (molecules < 1) throw DomainError("molecules must be >= 1");
  if (ref_distance) {
    require_finite(*ref_distance, "ref_distance");
    if (*ref_distance <= 0.0) throw DomainError("ref_distance must be > 0");
  }
  if (ref_count <= 0.0) throw DomainError("ref_count must be > 0");
}

void DimensionlessParams::validate() const {
  require_finite(kb, "kb'");
  require_finite(kd, "kd'");
  require_finite(r0, "r0'");
  require_finite(molecules, "molecules");
  require_nonnegative_rate(kf, "kf'");  // +inf allowed
  require_nonnegative_rate(kb, "kb'");
  require_nonnegative_rate(kd, "kd'");
  if (!(r0 > 1.0)) throw DomainError("r0' must be > 1");
  if (molecules < 0.0) throw DomainError("molecules must be >= 0");
}

DimensionlessParams to_dimensionless(const SystemParams& p) {
  p.validate();
  const double L = p.reference_distance();
  DimensionlessParams out;
  out.kf = p.kf * p.ref_count / (p.diffusion * L);
  out.kb = p.kb * L * L / p.diffusion;
  out.kd = p.kd * L * L / p.diffusion;
  out.r0 = p.release_distance / L;
  out.molecules = static_cast<double>(p.molecules) / p.ref_count;
  return out;
}

SystemParams to_dimensional(const DimensionlessParams& p, const ReferenceScales& ref) {
  require_finite(ref.length, "reference length");
  require_finite(ref.diffusion, "reference diffusion");
  if (ref.length <= 0.0 || ref.diffusion <= 0.0 || !(ref.count > 0.0))
    throw DomainError("reference scales must be positive");
  if (!std::isfinite(p.kf)) throw DomainError("kf' must be finite for a dimensional record");
  p.validate();
  const double L = ref.length;
  SystemParams out;
  out.receiver_radius = L;
  out.release_distance = p.r0 * L;
  out.diffusion = ref.diffusion;
  out.kf = p.kf * ref.diffusion * L / ref.count;
  out.kb = p.kb * ref.diffusion / (L * L);
  out.kd = p.kd * ref.diffusion / (L * L);
  out.molecules = std::llround(p.molecules * ref.count);
  out.ref_count = ref.count;
  return out;
}

double to_dimensional_time(double t_prime, const SystemParams& p) {
  require_finite(t_prime, "t'");
  if (t_prime < 0.0) throw DomainError("t' must be >= 0");
  const double L = p.reference_distance();
  return t_prime * L * L / p.diffusion;
}

double to_dimensionless_time(double t_seconds, const SystemParams& p) {
  require_finite(t_seconds, "t");
  if (t_seconds < 0.0) throw DomainError("t must be >= 0");
  const double L = p.reference_distance();
  return t_seconds * p.diffusion / (L * L);
}

}  // namespace rrm
