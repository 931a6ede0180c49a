#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "rrm/analytic.hpp"
#include "rrm/simulator.hpp"

namespace rrm::io {

/// Shortest decimal string that parses back to exactly v.
std::string format_number(double v);

/// Header "t_prime,value"; metadata lines are written first, each prefixed "# ".
void emit_csv(const analytic::SignalCurve& curve, const std::filesystem::path& path,
              const std::vector<std::string>& metadata = {});
/// Header "t_prime,value,stderr".
void emit_csv(const sim::EnsembleResult& result, const std::filesystem::path& path,
              const std::vector<std::string>& metadata = {});

struct CsvTable {
  std::vector<std::string> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

CsvTable read_csv(const std::filesystem::path& path);

}  // namespace rrm::io
