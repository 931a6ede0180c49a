#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rrm/analytic.hpp"
#include "rrm/simulator.hpp"
#include "rrm/units.hpp"

namespace rrm::cli {

enum class Mode { analytic, simulate, compare, sweep, homogenize };

struct TimeGrid {
  double start = 0.01;
  double end = 4.0;
  int count = 200;
  bool log = false;

  [[nodiscard]] std::vector<double> points() const;
};

struct SimSettings {
  double dt = 1e-3;
  int realizations = 200;
  std::optional<double> horizon;  ///< defaults to the grid end
  bool occupancy = false;
  std::uint64_t seed = 1;
  int bin_steps = 200;
  int threads = 1;
};

struct SweepAxis {
  std::string name;
  std::vector<double> values;
};

struct ExperimentConfig {
  Mode mode = Mode::analytic;
  std::string name = "curve";
  std::variant<DimensionlessParams, SystemParams> params;
  TimeGrid grid;
  int level = 4;
  std::optional<long long> receptors;  ///< M; absent means full coverage
  std::optional<double> receptor_radius;  ///< rs' for an ideal circular layout
  SimSettings sim;
  Mode sweep_run = Mode::analytic;
  std::vector<SweepAxis> sweep;
  std::filesystem::path output = "out";

  void validate() const;
  [[nodiscard]] DimensionlessParams dimensionless() const;
  /// Every setting after defaults, as "section.key" -> value. Thread count
  /// is left out so outputs do not depend on it.
  [[nodiscard]] std::map<std::string, std::string> resolved() const;
};

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> out;
  std::optional<int> realizations;
  std::optional<long long> na;
  std::optional<double> dt;
  std::optional<int> threads;
};

void apply_overrides(ExperimentConfig& cfg, const Overrides& o);

/// One config per point of the cartesian sweep (last axis varies fastest),
/// each in the sweep's run mode and named "<name>_<index>". An empty sweep
/// yields the config itself in run mode under its own name.
std::vector<ExperimentConfig> expand_sweep(const ExperimentConfig& cfg);

struct BinComparison {
  double t = 0.0, sim = 0.0, stderr_ = 0.0, analytic = 0.0;
  bool within = false;
};

struct ComparisonReport {
  double max_abs_dev = 0.0;
  double frac_bins_within_3se = 0.0;
  double peak_time_analytic = 0.0;
  double peak_time_sim = 0.0;
  std::vector<BinComparison> per_bin;
};

/// Bins with no contributing realization are left out of the fraction.
ComparisonReport compare(const sim::EnsembleResult& sim, const DimensionlessParams& reference);

/// Mode names as they appear in config files.
std::string mode_name(Mode m);
Mode parse_mode(const std::string& s);

/// Simulation config implied by an experiment.
sim::SimConfig sim_config(const ExperimentConfig& cfg);
/// Parameters of the analytic reference (homogenized when M < M_max).
DimensionlessParams analytic_reference(const ExperimentConfig& cfg);

/// Executes the experiment, writing artifacts under cfg.output. Returns the
/// process exit status; library errors propagate as exceptions.
int run(const ExperimentConfig& cfg, std::ostream& log);

}  // namespace rrm::cli
