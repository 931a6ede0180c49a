#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "rrm/specfun.hpp"
#include "rrm/units.hpp"

namespace rrm::analytic {

using specfun::Complex;

/// Roots of x^3 - c x^2 + (kb - kd) x - (kb - kd c) with c = 1 + kf/(4 pi),
/// sorted by (real, imag) descending.
struct CubicRoots {
  Complex alpha, beta, gamma;
  bool degenerate = false;        ///< min pairwise distance < 1e-9
  double min_separation = 0.0;

  [[nodiscard]] std::array<Complex, 3> as_array() const { return {alpha, beta, gamma}; }
};

/// Weights of the W-terms in the Green's function, one per root.
struct EtaConstants {
  Complex eta1, eta2, eta3;
};

struct VietaResiduals {
  double sum, pairwise, product;  // each relative to 1 + |coefficient|
};

CubicRoots solve_roots(const DimensionlessParams& p);
VietaResiduals vieta_residuals(const CubicRoots& r, const DimensionlessParams& p);

/// Throws DomainError on coalesced roots.
EtaConstants eta_constants(const CubicRoots& r);

/// Which closed form produced a value.
enum class Branch {
  inert,               // kf' = 0
  absorbing,           // kf' = inf, kd' = 0
  absorbing_degrading, // kf' = inf, kd' > 0
  irreversible,        // kb' = 0, finite kf'
  general,
  perturbed,           // general form after nudging kd' off a root coalescence
};

struct Evaluation {
  double value = 0.0;
  double imag_residue = 0.0;  ///< |Im| of the complex sum before the real part was taken
  Branch branch = Branch::general;
};

/// Probability density of a free molecule at radius r' and time t'.
double greens_function(double r, double t, const DimensionlessParams& p);
Evaluation greens_function_detail(double r, double t, const DimensionlessParams& p);

/// Probability that a molecule released at r0' is bound at time t'.
double cir(double t, const DimensionlessParams& p);
Evaluation cir_detail(double t, const DimensionlessParams& p);

/// Perfectly absorbing receiver with degradation in the channel.
double cir_irreversible_degrading(double t, double kd, double r0);
/// Perfectly absorbing receiver, no degradation: (1/r0) erfc((r0-1)/sqrt(4t)).
double cir_irreversible(double t, double r0);
/// Long-time bound fraction for kb' = kd' = 0: (1/r0) kf/(kf + 4 pi).
double cir_asymptote(const DimensionlessParams& p);

struct SignalCurve {
  std::vector<double> times;
  std::vector<double> values;
  DimensionlessParams meta;
  std::vector<std::string> notes;  ///< e.g. a kd' perturbation that was applied
};

/// values[i] = NA * cir(times[i]). With prepend_zero an exact (0, 0) point
/// is inserted in front.
SignalCurve expected_signal(std::span<const double> grid, const DimensionlessParams& p,
                            bool prepend_zero = false);

}  // namespace rrm::analytic
