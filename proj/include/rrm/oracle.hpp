#pragma once

#include <functional>
#include <optional>

#include <quadmath.h>

#include "rrm/specfun.hpp"
#include "rrm/units.hpp"

// Independent inverse-Laplace reference for the closed forms. Evaluation is
// carried out in binary128 so the exponential amplification of the Talbot
// contour does not eat the double-precision result.
namespace rrm::oracle {

using specfun::Complex;
using QComplex = __complex128;

struct LaplaceQuery {
  Complex s;
  DimensionlessParams params;
  std::optional<double> radius;  ///< r'; defaults to the receiver surface
};

/// Laplace transform of the free-molecule density at radius r'.
Complex laplace_greens(const LaplaceQuery& q);
/// Laplace transform of the channel impulse response.
Complex laplace_cir(Complex s, const DimensionlessParams& p);

QComplex laplace_greens_q(QComplex s, const DimensionlessParams& p, double r);
QComplex laplace_cir_q(QComplex s, const DimensionlessParams& p);

using Transform = std::function<QComplex(QComplex)>;

/// One fixed-Talbot pass with n_nodes contour points. `distance` is the
/// exponent distance of a e^{-sqrt(s) distance} factor in F; it widens the
/// contour so the saddle of that factor lies inside.
double talbot_sum(const Transform& F, double t, int n_nodes, double distance = 0.0);

/// talbot_sum plus a second pass with 1.5x the nodes; throws
/// ConvergenceError when the two disagree by more than 1e-9 (1 + |f|).
double talbot_invert(const Transform& F, double t, int n_nodes = 64, double distance = 0.0);

double invert_cir(double t, const DimensionlessParams& p, int n_nodes = 64);
double invert_greens(double r, double t, const DimensionlessParams& p, int n_nodes = 64);

}  // namespace rrm::oracle
