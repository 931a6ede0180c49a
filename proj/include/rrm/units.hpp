#pragma once

#include <optional>

namespace rrm {

/// Physical (SI) description of the channel.
struct SystemParams {
  double receiver_radius = 0.0;   ///< a [m]
  double release_distance = 0.0;  ///< r0 [m], centre to transmitter
  double diffusion = 0.0;         ///< D_A [m^2/s]
  double kf = 0.0;                ///< forward rate [m^3/(molecule s)]
  double kb = 0.0;                ///< backward rate [1/s]
  double kd = 0.0;                ///< degradation rate [1/s]
  long long molecules = 1;        ///< N_A
  std::optional<double> ref_distance;  ///< defaults to receiver_radius
  double ref_count = 1.0;

  [[nodiscard]] double reference_distance() const {
    return ref_distance.value_or(receiver_radius);
  }
  void validate() const;
};

/// Primed parameter set. With the default reference choice the receiver
/// surface sits at r' = 1. kf may be +infinity (perfectly absorbing limit).
struct DimensionlessParams {
  double kf = 0.0;
  double kb = 0.0;
  double kd = 0.0;
  double r0 = 2.0;
  double molecules = 1.0;

  void validate() const;
  friend bool operator==(const DimensionlessParams&, const DimensionlessParams&) = default;
};

/// Reference scales needed to rebuild a dimensional record.
struct ReferenceScales {
  double length = 0.0;     ///< r_ref [m]
  double diffusion = 0.0;  ///< D_A [m^2/s]
  double count = 1.0;      ///< N_Aref
};

DimensionlessParams to_dimensionless(const SystemParams& p);

/// Inverse of to_dimensionless. Uses r_ref = receiver radius.
SystemParams to_dimensional(const DimensionlessParams& p, const ReferenceScales& ref);

double to_dimensional_time(double t_prime, const SystemParams& p);
double to_dimensionless_time(double t_seconds, const SystemParams& p);

}  // namespace rrm
