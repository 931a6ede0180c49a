#include "rrm/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <json.hpp>

#include "rrm/csv.hpp"
#include "rrm/errors.hpp"
#include "rrm/homogenization.hpp"
#include "rrm/version.hpp"

namespace rrm::cli {
namespace {

namespace pt = boost::property_tree;
using io::format_number;

long long faces_at(int level) { return 20LL << (2 * level); }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& raw, const std::string& key) {
  const std::string s = trim(raw);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ConfigError("key " + key + ": '" + s + "' is not a number");
  return v;
}

long long parse_int(const std::string& raw, const std::string& key) {
  const std::string s = trim(raw);
  long long v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ConfigError("key " + key + ": '" + s + "' is not an integer");
  return v;
}

std::uint64_t parse_u64(const std::string& raw, const std::string& key) {
  const std::string s = trim(raw);
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ConfigError("key " + key + ": '" + s + "' is not an unsigned integer");
  return v;
}

bool parse_bool(const std::string& raw, const std::string& key) {
  const std::string s = trim(raw);
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw ConfigError("key " + key + ": '" + s + "' is not a boolean");
}

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s = {
      {"experiment", {"mode", "name"}},
      {"params", {"kf", "kb", "kd", "r0", "na"}},
      {"system", {"receiver_radius", "release_distance", "diffusion", "kf", "kb", "kd", "na",
                  "ref_distance", "ref_count"}},
      {"grid", {"start", "end", "count", "spacing"}},
      {"receptors", {"level", "count", "radius"}},
      {"sim", {"dt_prime", "realizations", "horizon", "occupancy", "seed", "bin_steps", "threads"}},
      {"sweep", {"run", "kf", "kb", "kd", "r0", "na", "receptors", "level", "occupancy"}},
      {"output", {"dir"}},
  };
  return s;
}

const std::vector<std::string>& sweep_names() {
  static const std::vector<std::string> names = {"kf", "kb", "kd", "r0", "na", "receptors", "level", "occupancy"};
  return names;
}

void set_axis(ExperimentConfig& cfg, const std::string& name, double v) {
  if (name == "receptors") {
    cfg.receptors = std::llround(v);
  } else if (name == "level") {
    cfg.level = static_cast<int>(std::lround(v));
  } else if (name == "occupancy") {
    cfg.sim.occupancy = v != 0.0;
  } else if (auto* d = std::get_if<DimensionlessParams>(&cfg.params)) {
    if (name == "kf") d->kf = v;
    else if (name == "kb") d->kb = v;
    else if (name == "kd") d->kd = v;
    else if (name == "r0") d->r0 = v;
    else if (name == "na") d->molecules = v;
  } else {
    auto& s = std::get<SystemParams>(cfg.params);
    if (name == "kf") s.kf = v;
    else if (name == "kb") s.kb = v;
    else if (name == "kd") s.kd = v;
    else if (name == "r0") s.release_distance = v;
    else if (name == "na") s.molecules = std::llround(v);
  }
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + format_number(v[i]);
  return out;
}

std::vector<std::string> metadata_lines(const ExperimentConfig& cfg) {
  std::vector<std::string> lines;
  lines.push_back(std::string("rrm ") + kVersion);
  for (const auto& [k, v] : cfg.resolved()) lines.push_back(k + "=" + v);
  return lines;
}

std::filesystem::path artifact(const ExperimentConfig& cfg, const std::string& suffix) {
  return cfg.output / (cfg.name + suffix);
}

nlohmann::json report_json(const ComparisonReport& r, const ExperimentConfig& cfg) {
  nlohmann::json j;
  j["max_abs_dev"] = r.max_abs_dev;
  j["frac_bins_within_3se"] = r.frac_bins_within_3se;
  j["peak_time_analytic"] = r.peak_time_analytic;
  j["peak_time_sim"] = r.peak_time_sim;
  nlohmann::json bins = nlohmann::json::array();
  for (const auto& b : r.per_bin)
    bins.push_back({{"t_prime", b.t}, {"sim", b.sim}, {"stderr", b.stderr_}, {"analytic", b.analytic},
                    {"within_3se", b.within}});
  j["bins"] = bins;
  nlohmann::json meta = nlohmann::json::object();
  for (const auto& [k, v] : cfg.resolved()) meta[k] = v;
  meta["version"] = kVersion;
  j["config"] = meta;
  return j;
}

int run_single(const ExperimentConfig& cfg, std::ostream& log);

int run_sweep(const ExperimentConfig& cfg, std::ostream& log) {
  const auto points = expand_sweep(cfg);
  if (cfg.sweep.empty()) return run_single(points.front(), log);

  std::ostringstream index;
  for (const auto& line : metadata_lines(cfg)) index << "# " << line << '\n';
  index << "point,file";
  for (const auto& axis : cfg.sweep) index << ',' << axis.name;
  index << ",status\n";

  int status = 0;
  std::vector<std::size_t> idx(cfg.sweep.size(), 0);
  for (std::size_t point = 0; point < points.size(); ++point) {
    ExperimentConfig pc = points[point];
    bool analytic_only = false;
    if ((pc.mode == Mode::simulate || pc.mode == Mode::compare) && std::isinf(pc.dimensionless().kf)) {
      pc.mode = Mode::analytic;
      analytic_only = true;
    }
    std::string file = pc.name + (pc.mode == Mode::compare ? "_sim.csv" : ".csv");
    std::string state = analytic_only ? "analytic_only" : "ok";
    try {
      status = std::max(status, run_single(pc, log));
    } catch (const StepSizeError& e) {
      log << "point " << point << ": " << e.what() << '\n';
      state = "step_size_error";
      file.clear();
      status = std::max(status, 3);
    }
    index << point << ',' << file;
    for (std::size_t a = 0; a < cfg.sweep.size(); ++a) index << ',' << format_number(cfg.sweep[a].values[idx[a]]);
    index << ',' << state << '\n';
    for (std::size_t a = cfg.sweep.size(); a-- > 0;) {
      if (++idx[a] < cfg.sweep[a].values.size()) break;
      idx[a] = 0;
    }
  }
  std::filesystem::create_directories(cfg.output);
  std::ofstream out(artifact(cfg, "_index.csv"), std::ios::binary);
  out << index.str();
  if (!out) throw Error("failed to write sweep index");
  return status;
}

int run_single(const ExperimentConfig& cfg, std::ostream& log) {
  const auto meta = metadata_lines(cfg);
  switch (cfg.mode) {
    case Mode::analytic: {
      const auto grid = cfg.grid.points();
      const auto curve = analytic::expected_signal(grid, analytic_reference(cfg));
      io::emit_csv(curve, artifact(cfg, ".csv"), meta);
      log << "wrote " << artifact(cfg, ".csv").string() << '\n';
      return 0;
    }
    case Mode::simulate: {
      const auto res = sim::run_ensemble(sim_config(cfg));
      io::emit_csv(res, artifact(cfg, ".csv"), meta);
      log << "wrote " << artifact(cfg, ".csv").string() << '\n';
      return 0;
    }
    case Mode::compare: {
      const DimensionlessParams ref = analytic_reference(cfg);
      const auto grid = cfg.grid.points();
      io::emit_csv(analytic::expected_signal(grid, ref), artifact(cfg, "_analytic.csv"), meta);
      const auto res = sim::run_ensemble(sim_config(cfg));
      io::emit_csv(res, artifact(cfg, "_sim.csv"), meta);
      const ComparisonReport rep = compare(res, ref);
      std::ofstream out(artifact(cfg, "_report.json"), std::ios::binary);
      out << report_json(rep, cfg).dump(2) << '\n';
      if (!out) throw Error("failed to write comparison report");
      log << cfg.name << ": within_3se=" << format_number(rep.frac_bins_within_3se)
          << " max_abs_dev=" << format_number(rep.max_abs_dev)
          << " peak_analytic=" << format_number(rep.peak_time_analytic)
          << " peak_sim=" << format_number(rep.peak_time_sim) << '\n';
      return 0;
    }
    case Mode::homogenize: {
      const DimensionlessParams p = cfg.dimensionless();
      const long long faces = faces_at(cfg.level);
      const long long M = cfg.receptors.value_or(faces);
      const auto layout = cfg.receptor_radius ? homog::ReceptorLayoutParams::circular(M, *cfg.receptor_radius)
                                              : homog::ReceptorLayoutParams::from_mesh(M, faces);
      const double phi = homog::correction_factor(layout, p.kf);
      log << "M=" << M << " rs=" << format_number(layout.rs) << " lambda=" << format_number(layout.coverage_lambda)
          << " phi=" << format_number(phi) << " kf_star=" << format_number(homog::effective_forward_rate(p.kf, phi))
          << " berg_purcell=" << format_number(homog::berg_purcell_factor(layout))
          << " zwanzig=" << format_number(homog::zwanzig_factor(layout)) << '\n';
      return 0;
    }
    case Mode::sweep:
      return run_sweep(cfg, log);
  }
  return 0;
}

}  // namespace

std::vector<double> TimeGrid::points() const {
  std::vector<double> p(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / (count - 1);
    p[i] = log ? start * std::pow(end / start, f) : start + f * (end - start);
  }
  p.front() = start;
  p.back() = end;
  return p;
}

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::analytic: return "analytic";
    case Mode::simulate: return "simulate";
    case Mode::compare: return "compare";
    case Mode::sweep: return "sweep";
    case Mode::homogenize: return "homogenize";
  }
  return "?";
}

Mode parse_mode(const std::string& s) {
  for (Mode m : {Mode::analytic, Mode::simulate, Mode::compare, Mode::sweep, Mode::homogenize})
    if (mode_name(m) == s) return m;
  throw ConfigError("unknown mode '" + s + "'");
}

DimensionlessParams ExperimentConfig::dimensionless() const {
  if (const auto* d = std::get_if<DimensionlessParams>(&params)) return *d;
  return to_dimensionless(std::get<SystemParams>(params));
}

void ExperimentConfig::validate() const {
  try {
    dimensionless().validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (grid.count < 2) throw ConfigError("grid.count must be >= 2");
  if (!(grid.start > 0.0) || !(grid.end > grid.start) || !std::isfinite(grid.end))
    throw ConfigError("grid needs 0 < start < end");
  if (level < 0 || level > 6) throw ConfigError("receptors.level must lie in [0, 6]");
  if (receptors && (*receptors < 0 || *receptors > faces_at(level)))
    throw ConfigError("receptors.count must lie in [0, " + std::to_string(faces_at(level)) + "]");
  if (receptor_radius && !(*receptor_radius > 0.0)) throw ConfigError("receptors.radius must be > 0");
  if (!(sim.dt > 0.0) || !std::isfinite(sim.dt)) throw ConfigError("sim.dt_prime must be > 0");
  if (sim.realizations < 1) throw ConfigError("sim.realizations must be >= 1");
  if (sim.bin_steps < 1) throw ConfigError("sim.bin_steps must be >= 1");
  if (sim.threads < 1) throw ConfigError("sim.threads must be >= 1");
  if (sim.horizon && !(*sim.horizon >= sim.dt)) throw ConfigError("sim.horizon must be >= dt_prime");
  if (sweep_run == Mode::sweep) throw ConfigError("sweep.run cannot be sweep");
  for (const auto& axis : sweep) {
    if (std::find(sweep_names().begin(), sweep_names().end(), axis.name) == sweep_names().end())
      throw ConfigError("unknown sweep parameter '" + axis.name + "'");
    if (axis.values.empty()) throw ConfigError("sweep." + axis.name + " has no values");
  }
}

std::map<std::string, std::string> ExperimentConfig::resolved() const {
  std::map<std::string, std::string> m;
  m["experiment.mode"] = mode_name(mode);
  m["experiment.name"] = name;
  if (const auto* d = std::get_if<DimensionlessParams>(&params)) {
    m["params.kf"] = format_number(d->kf);
    m["params.kb"] = format_number(d->kb);
    m["params.kd"] = format_number(d->kd);
    m["params.r0"] = format_number(d->r0);
    m["params.na"] = format_number(d->molecules);
  } else {
    const auto& s = std::get<SystemParams>(params);
    m["system.receiver_radius"] = format_number(s.receiver_radius);
    m["system.release_distance"] = format_number(s.release_distance);
    m["system.diffusion"] = format_number(s.diffusion);
    m["system.kf"] = format_number(s.kf);
    m["system.kb"] = format_number(s.kb);
    m["system.kd"] = format_number(s.kd);
    m["system.na"] = std::to_string(s.molecules);
    m["system.ref_distance"] = format_number(s.reference_distance());
    m["system.ref_count"] = format_number(s.ref_count);
  }
  m["grid.start"] = format_number(grid.start);
  m["grid.end"] = format_number(grid.end);
  m["grid.count"] = std::to_string(grid.count);
  m["grid.spacing"] = grid.log ? "log" : "linear";
  m["receptors.level"] = std::to_string(level);
  m["receptors.count"] = std::to_string(receptors.value_or(faces_at(level)));
  if (receptor_radius) m["receptors.radius"] = format_number(*receptor_radius);
  m["sim.dt_prime"] = format_number(sim.dt);
  m["sim.realizations"] = std::to_string(sim.realizations);
  m["sim.horizon"] = format_number(sim.horizon.value_or(grid.end));
  m["sim.occupancy"] = sim.occupancy ? "true" : "false";
  m["sim.seed"] = std::to_string(sim.seed);
  m["sim.bin_steps"] = std::to_string(sim.bin_steps);
  m["sweep.run"] = mode_name(sweep_run);
  for (const auto& axis : sweep) m["sweep." + axis.name] = join(axis.values);
  return m;
}

ExperimentConfig parse_config(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.message() + " (line " + std::to_string(e.line()) + ")");
  }
  for (const auto& [section, body] : tree) {
    auto it = schema().find(section);
    if (it == schema().end()) throw ConfigError("unknown section [" + section + "]");
    if (body.empty() && !body.data().empty()) throw ConfigError("key '" + section + "' outside any section");
    for (const auto& [key, value] : body)
      if (!it->second.count(key)) throw ConfigError("unknown key " + section + "." + key);
  }

  ExperimentConfig cfg;
  auto get = [&](const std::string& path) -> std::optional<std::string> {
    if (auto v = tree.get_optional<std::string>(pt::ptree::path_type(path, '.'))) return trim(*v);
    return std::nullopt;
  };

  if (auto v = get("experiment.mode")) cfg.mode = parse_mode(*v);
  if (auto v = get("experiment.name")) cfg.name = *v;
  if (cfg.name.empty() || cfg.name.find_first_of("/\\") != std::string::npos)
    throw ConfigError("experiment.name must be a plain file stem");

  const bool has_params = tree.count("params") > 0;
  const bool has_system = tree.count("system") > 0;
  if (has_params == has_system) throw ConfigError("exactly one of [params] or [system] is required");
  if (has_params) {
    DimensionlessParams d;
    if (auto v = get("params.kf")) d.kf = parse_double(*v, "params.kf");
    if (auto v = get("params.kb")) d.kb = parse_double(*v, "params.kb");
    if (auto v = get("params.kd")) d.kd = parse_double(*v, "params.kd");
    if (auto v = get("params.r0")) d.r0 = parse_double(*v, "params.r0");
    d.molecules = 1000;
    if (auto v = get("params.na")) d.molecules = static_cast<double>(parse_int(*v, "params.na"));
    cfg.params = d;
  } else {
    SystemParams s;
    auto need = [&](const char* key) {
      auto v = get(std::string("system.") + key);
      if (!v) throw ConfigError(std::string("missing system.") + key);
      return parse_double(*v, std::string("system.") + key);
    };
    s.receiver_radius = need("receiver_radius");
    s.release_distance = need("release_distance");
    s.diffusion = need("diffusion");
    s.kf = need("kf");
    if (auto v = get("system.kb")) s.kb = parse_double(*v, "system.kb");
    if (auto v = get("system.kd")) s.kd = parse_double(*v, "system.kd");
    s.molecules = 1000;
    if (auto v = get("system.na")) s.molecules = parse_int(*v, "system.na");
    if (auto v = get("system.ref_distance")) s.ref_distance = parse_double(*v, "system.ref_distance");
    if (auto v = get("system.ref_count")) s.ref_count = parse_double(*v, "system.ref_count");
    try {
      s.validate();
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
    cfg.params = s;
  }

  if (auto v = get("grid.start")) cfg.grid.start = parse_double(*v, "grid.start");
  if (auto v = get("grid.end")) cfg.grid.end = parse_double(*v, "grid.end");
  if (auto v = get("grid.count")) cfg.grid.count = static_cast<int>(parse_int(*v, "grid.count"));
  if (auto v = get("grid.spacing")) {
    if (*v != "linear" && *v != "log") throw ConfigError("grid.spacing must be linear or log");
    cfg.grid.log = *v == "log";
  }

  if (auto v = get("receptors.level")) cfg.level = static_cast<int>(parse_int(*v, "receptors.level"));
  if (auto v = get("receptors.count")) cfg.receptors = parse_int(*v, "receptors.count");
  if (auto v = get("receptors.radius")) cfg.receptor_radius = parse_double(*v, "receptors.radius");

  if (auto v = get("sim.dt_prime")) cfg.sim.dt = parse_double(*v, "sim.dt_prime");
  if (auto v = get("sim.realizations")) cfg.sim.realizations = static_cast<int>(parse_int(*v, "sim.realizations"));
  if (auto v = get("sim.horizon")) cfg.sim.horizon = parse_double(*v, "sim.horizon");
  if (auto v = get("sim.occupancy")) cfg.sim.occupancy = parse_bool(*v, "sim.occupancy");
  if (auto v = get("sim.seed")) cfg.sim.seed = parse_u64(*v, "sim.seed");
  if (auto v = get("sim.bin_steps")) cfg.sim.bin_steps = static_cast<int>(parse_int(*v, "sim.bin_steps"));
  if (auto v = get("sim.threads")) cfg.sim.threads = static_cast<int>(parse_int(*v, "sim.threads"));

  if (auto body = tree.get_child_optional("sweep")) {
    for (const auto& [key, value] : *body) {
      if (key == "run") {
        cfg.sweep_run = parse_mode(trim(value.data()));
        continue;
      }
      SweepAxis axis{key, {}};
      std::stringstream ss(value.data());
      for (std::string item; std::getline(ss, item, ',');) {
        if (trim(item).empty()) continue;
        if (key == "occupancy") axis.values.push_back(parse_bool(item, "sweep.occupancy") ? 1.0 : 0.0);
        else axis.values.push_back(parse_double(item, "sweep." + key));
      }
      cfg.sweep.push_back(std::move(axis));
    }
  }
  if (auto v = get("output.dir")) cfg.output = *v;

  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  return parse_config(in);
}

std::vector<ExperimentConfig> expand_sweep(const ExperimentConfig& cfg) {
  ExperimentConfig base = cfg;
  base.mode = cfg.sweep_run;
  base.sweep.clear();
  if (cfg.sweep.empty()) return {base};

  std::vector<ExperimentConfig> points;
  std::vector<std::size_t> idx(cfg.sweep.size(), 0);
  for (bool done = false; !done;) {
    ExperimentConfig pc = base;
    pc.name = cfg.name + "_" + std::to_string(points.size());
    for (std::size_t a = 0; a < cfg.sweep.size(); ++a) set_axis(pc, cfg.sweep[a].name, cfg.sweep[a].values[idx[a]]);
    pc.validate();
    points.push_back(std::move(pc));
    done = true;
    for (std::size_t a = cfg.sweep.size(); a-- > 0;) {
      if (++idx[a] < cfg.sweep[a].values.size()) {
        done = false;
        break;
      }
      idx[a] = 0;
    }
  }
  return points;
}

void apply_overrides(ExperimentConfig& cfg, const Overrides& o) {
  if (o.seed) cfg.sim.seed = *o.seed;
  if (o.out) cfg.output = *o.out;
  if (o.realizations) cfg.sim.realizations = *o.realizations;
  if (o.dt) cfg.sim.dt = *o.dt;
  if (o.threads) cfg.sim.threads = *o.threads;
  if (o.na) {
    if (auto* d = std::get_if<DimensionlessParams>(&cfg.params)) d->molecules = static_cast<double>(*o.na);
    else std::get<SystemParams>(cfg.params).molecules = *o.na;
  }
  cfg.validate();
}

sim::SimConfig sim_config(const ExperimentConfig& cfg) {
  sim::SimConfig s;
  s.params = cfg.dimensionless();
  s.dt = cfg.sim.dt;
  s.realizations = cfg.sim.realizations;
  s.horizon = cfg.sim.horizon.value_or(cfg.grid.end);
  s.occupancy = cfg.sim.occupancy;
  s.seed = cfg.sim.seed;
  s.level = cfg.level;
  s.receptors = cfg.receptors.value_or(-1);
  s.bin_steps = cfg.sim.bin_steps;
  s.threads = cfg.sim.threads;
  return s;
}

DimensionlessParams analytic_reference(const ExperimentConfig& cfg) {
  const DimensionlessParams p = cfg.dimensionless();
  const long long faces = faces_at(cfg.level);
  if (cfg.receptor_radius) {
    return homog::finite_receptor_params(
        p, homog::ReceptorLayoutParams::circular(cfg.receptors.value_or(faces), *cfg.receptor_radius));
  }
  if (cfg.receptors && *cfg.receptors < faces)
    return homog::finite_receptor_params(p, homog::ReceptorLayoutParams::from_mesh(*cfg.receptors, faces));
  return p;
}

ComparisonReport compare(const sim::EnsembleResult& sim, const DimensionlessParams& reference) {
  ComparisonReport rep;
  std::size_t used = 0, within = 0;
  double best_sim = -1.0, best_an = -1.0;
  for (std::size_t i = 0; i < sim.curve.times.size(); ++i) {
    BinComparison b;
    b.t = sim.curve.times[i];
    b.sim = sim.curve.values[i];
    b.stderr_ = sim.std_error[i];
    b.analytic = reference.molecules * analytic::cir(b.t, reference);
    const double dev = std::abs(b.sim - b.analytic);
    b.within = dev <= 3.0 * b.stderr_;
    if (sim.counts[i] >= 1) {
      ++used;
      within += b.within ? 1 : 0;
      rep.max_abs_dev = std::max(rep.max_abs_dev, dev);
    }
    if (b.sim > best_sim) {
      best_sim = b.sim;
      rep.peak_time_sim = b.t;
    }
    if (b.analytic > best_an) {
      best_an = b.analytic;
      rep.peak_time_analytic = b.t;
    }
    rep.per_bin.push_back(b);
  }
  rep.frac_bins_within_3se = used ? static_cast<double>(within) / static_cast<double>(used) : 0.0;
  return rep;
}

int run(const ExperimentConfig& cfg, std::ostream& log) {
  cfg.validate();
  return run_single(cfg, log);
}

}  // namespace rrm::cli
