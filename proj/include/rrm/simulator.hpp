#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "rrm/analytic.hpp"
#include "rrm/mesh.hpp"
#include "rrm/units.hpp"

namespace rrm::sim {

using Rng = std::mt19937_64;

/// Independent stream for realization `index` of an ensemble seeded by `seed`.
Rng realization_rng(std::uint64_t seed, std::uint64_t index);

double degradation_prob(double kd, double dt);
/// Probability that a Gaussian step of per-coordinate variance 2 dt' from
/// radius r' ends inside the unit sphere.
double overlap_probability(double r, double dt);
/// Integral of overlap_probability(r) r^2 over r >= 1.
double rho_normalization(double dt);
/// kf dt / (4 pi rho); throws StepSizeError when the result exceeds one.
double forward_reaction_prob(double kf, double dt, double rho);

/// Inverse-CDF table for the release radius density P_ovr(r) r^2 / rho
/// on [1, 1 + 8 sigma], sigma^2 = 4 dt'.
class RebindSampler {
 public:
  static constexpr std::size_t kTablePoints = 4096;

  explicit RebindSampler(double dt);

  double operator()(Rng& rng) const;
  [[nodiscard]] double cdf(double r) const;  ///< piecewise-linear table CDF
  [[nodiscard]] double upper() const { return radii_.back(); }
  [[nodiscard]] std::span<const double> radii() const { return radii_; }

 private:
  std::vector<double> radii_;
  std::vector<double> cdf_;
};

double sample_rebind_radius(double dt, Rng& rng);

struct SimConfig {
  DimensionlessParams params;
  double dt = 1e-3;
  int realizations = 200;
  double horizon = 4.0;
  bool occupancy = false;
  std::uint64_t seed = 1;
  int level = 4;
  long long receptors = -1;  ///< M; negative means every face is a receptor
  int bin_steps = 200;
  int threads = 1;

  void validate() const;
  [[nodiscard]] long long total_steps() const;
  /// Step counts (1-based, after the step) at which bound counts are recorded.
  [[nodiscard]] std::vector<long long> bin_ends() const;
};

enum class State : std::uint8_t { free, bound, degraded };

struct Particle {
  Vec3 pos;
  State state = State::free;
  std::uint32_t receptor = 0;
  long long free_steps_left = 0;  ///< free steps until degradation fires
};

struct Counts {
  long long free = 0, bound = 0, degraded = 0;
};

/// Immutable data shared by every realization of one ensemble.
class Engine {
 public:
  explicit Engine(const SimConfig& cfg);

  [[nodiscard]] const SimConfig& config() const { return cfg_; }
  [[nodiscard]] const ReceiverMesh& mesh() const { return mesh_; }
  [[nodiscard]] double bind_prob() const { return p_bind_; }
  [[nodiscard]] double rho() const { return rho_; }
  [[nodiscard]] const RebindSampler& rebind() const { return rebind_; }

 private:
  SimConfig cfg_;
  ReceiverMesh mesh_;
  double rho_;
  double p_bind_;
  RebindSampler rebind_;
};

/// One release of NA molecules, advanced step by step.
class Realization {
 public:
  Realization(const Engine& engine, std::uint64_t index);

  void step();
  [[nodiscard]] long long steps_done() const { return step_; }
  [[nodiscard]] Counts counts() const { return counts_; }
  [[nodiscard]] const std::vector<Particle>& particles() const { return particles_; }
  [[nodiscard]] bool finished() const { return step_ >= last_step_; }

 private:
  void advance_free(std::uint32_t i);
  void bind(std::uint32_t i, const Vec3& hit, std::uint32_t face);
  void release(std::uint32_t i);
  void schedule(std::uint32_t i, long long at);
  long long draw_countdown(double rate);

  const Engine* engine_;
  Rng rng_;
  std::vector<Particle> particles_;
  std::vector<std::vector<std::uint32_t>> wake_;     // free particles due at step s
  std::vector<std::vector<std::uint32_t>> release_;  // bound particles released at step s
  std::vector<std::uint8_t> occupied_;
  Counts counts_;
  long long step_ = 0;  // steps completed
  long long last_step_ = 0;
  double step_sd_;
};

struct EnsembleResult {
  analytic::SignalCurve curve;   ///< mean bound count per bin
  std::vector<double> std_error;
  std::vector<long long> counts;  ///< realizations contributing per bin
};

EnsembleResult run_ensemble(const SimConfig& cfg);

}  // namespace rrm::sim
