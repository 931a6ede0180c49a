#include "rrm/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "rrm/errors.hpp"

namespace rrm::io {
namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error("write failed for " + path.string());
}

void write_metadata(std::ostream& out, const std::vector<std::string>& metadata) {
  for (const auto& line : metadata) out << "# " << line << '\n';
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void emit_csv(const analytic::SignalCurve& curve, const std::filesystem::path& path,
              const std::vector<std::string>& metadata) {
  if (curve.times.empty()) throw DomainError("refusing to write an empty curve");
  auto out = open_out(path);
  write_metadata(out, metadata);
  for (const auto& note : curve.notes) out << "# note: " << note << '\n';
  out << "t_prime,value\n";
  for (std::size_t i = 0; i < curve.times.size(); ++i)
    out << format_number(curve.times[i]) << ',' << format_number(curve.values[i]) << '\n';
  finish(out, path);
}

void emit_csv(const sim::EnsembleResult& result, const std::filesystem::path& path,
              const std::vector<std::string>& metadata) {
  if (result.curve.times.empty()) throw DomainError("refusing to write an empty ensemble");
  auto out = open_out(path);
  write_metadata(out, metadata);
  out << "t_prime,value,stderr\n";
  for (std::size_t i = 0; i < result.curve.times.size(); ++i)
    out << format_number(result.curve.times[i]) << ',' << format_number(result.curve.values[i]) << ','
        << format_number(result.std_error[i]) << '\n';
  finish(out, path);
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  CsvTable table;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      table.metadata.push_back(line.size() > 2 ? line.substr(2) : std::string());
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (table.columns.empty()) {
      table.columns = std::move(cells);
      continue;
    }
    std::vector<double> row;
    for (const auto& c : cells) row.push_back(std::strtod(c.c_str(), nullptr));
    table.rows.push_back(std::move(row));
  }
  if (table.columns.empty()) throw Error(path.string() + " has no header row");
  return table;
}

}  // namespace rrm::io
