#include "rrm/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "rrm/csv.hpp"
#include "rrm/errors.hpp"

namespace rrm::io {
namespace {

constexpr double kWidth = 640, kHeight = 420, kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;
constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

void render_svg(const std::vector<std::filesystem::path>& inputs, const std::filesystem::path& output,
                const std::string& title) {
  if (inputs.empty()) throw ConfigError("render needs at least one CSV");
  std::vector<CsvTable> tables;
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = 0.0, ymax = -xmin;
  for (const auto& p : inputs) {
    tables.push_back(read_csv(p));
    const auto& t = tables.back();
    if (t.columns.size() < 2) throw ConfigError(p.string() + ": need at least two columns");
    const bool band = t.columns.size() >= 3;
    for (const auto& r : t.rows) {
      xmin = std::min(xmin, r[0]);
      xmax = std::max(xmax, r[0]);
      const double se = band ? 3.0 * r[2] : 0.0;
      ymax = std::max(ymax, r[1] + se);
      ymin = std::min(ymin, r[1] - se);
    }
  }
  if (!(xmax > xmin)) xmax = xmin + 1.0;
  if (!(ymax > ymin)) ymax = ymin + 1.0;

  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto X = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
  auto Y = [&](double y) { return kTop + (1.0 - (y - ymin) / (ymax - ymin)) * ph; };

  std::ostringstream svg;
  svg.precision(6);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = xmin + i * (xmax - xmin) / 4, fy = ymin + i * (ymax - ymin) / 4;
    svg << "<text x=\"" << X(fx) << "\" y=\"" << kTop + ph + 18 << "\" text-anchor=\"middle\">" << fx << "</text>\n";
    svg << "<text x=\"" << kLeft - 6 << "\" y=\"" << Y(fy) + 4 << "\" text-anchor=\"end\">" << fy << "</text>\n";
  }
  svg << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 10 << "\" text-anchor=\"middle\">"
      << esc(tables[0].columns[0]) << "</text>\n";
  if (!title.empty())
    svg << "<text x=\"" << kLeft + pw / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << esc(title)
        << "</text>\n";

  for (std::size_t k = 0; k < tables.size(); ++k) {
    const auto& t = tables[k];
    const char* color = kColors[k % std::size(kColors)];
    if (t.columns.size() >= 3 && !t.rows.empty()) {
      svg << "<polygon fill=\"" << color << "\" fill-opacity=\"0.2\" stroke=\"none\" points=\"";
      for (const auto& r : t.rows) svg << X(r[0]) << ',' << Y(r[1] + 3 * r[2]) << ' ';
      for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it)
        svg << X((*it)[0]) << ',' << Y((*it)[1] - 3 * (*it)[2]) << ' ';
      svg << "\"/>\n";
    }
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& r : t.rows) svg << X(r[0]) << ',' << Y(r[1]) << ' ';
    svg << "\"/>\n";
    svg << "<text x=\"" << kLeft + 8 << "\" y=\"" << kTop + 16 + 14 * k << "\" fill=\"" << color << "\">"
        << esc(inputs[k].filename().string()) << "</text>\n";
  }
  svg << "</svg>\n";

  if (output.has_parent_path()) std::filesystem::create_directories(output.parent_path());
  std::ofstream out(output, std::ios::binary);
  out << svg.str();
  if (!out) throw Error("failed to write " + output.string());
}

}  // namespace rrm::io
