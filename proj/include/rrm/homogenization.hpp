#pragma once

#include "rrm/units.hpp"

namespace rrm::homog {

/// M circular receptors of radius rs' on the unit sphere.
struct ReceptorLayoutParams {
  long long M = 0;
  double rs = 0.0;
  double coverage_lambda = 0.0;  ///< fraction of the surface covered

  /// Ideal circular patches: lambda = M rs^2 / 4.
  static ReceptorLayoutParams circular(long long M, double rs);
  /// M of the M_max equal mesh triangles: rs from the triangle area,
  /// lambda = M / M_max.
  static ReceptorLayoutParams from_mesh(long long M, long long M_max);

  void validate() const;
};

/// Steady fluxes with C_inf = 1, D' = 1, a' = 1.
struct FluxPair {
  double j_sphere = 0.0;    ///< into the fully covered receiver
  double j_receptor = 0.0;  ///< into one isolated receptor
};

FluxPair steady_fluxes(const ReceptorLayoutParams& layout, double kf);

/// Ratio of the patchy-sphere steady flux to the fully covered one.
double correction_factor(const ReceptorLayoutParams& layout, double kf);
double effective_forward_rate(double kf, double phi);
double berg_purcell_factor(const ReceptorLayoutParams& layout);
double zwanzig_factor(const ReceptorLayoutParams& layout);
double equivalent_receptor_radius(double triangle_area);

/// Copy of p with kf' replaced by the homogenized rate.
DimensionlessParams finite_receptor_params(const DimensionlessParams& p,
                                           const ReceptorLayoutParams& layout);

}  // namespace rrm::homog
