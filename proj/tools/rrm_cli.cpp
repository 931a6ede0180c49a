#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rrm/errors.hpp"
#include "rrm/experiment.hpp"
#include "rrm/mesh.hpp"
#include "rrm/render.hpp"
#include "rrm/version.hpp"

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

int fail(const char* kind, int code, const std::string& message) {
  std::cerr << "error kind=" << kind << " exit=" << code << " message=" << quoted(message) << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reversible-reaction receiver: analytic signals, particle simulation, comparisons"};
  app.set_version_flag("--version", rrm::kVersion);
  app.require_subcommand(1);

  std::string config_path;
  rrm::cli::Overrides ov;
  std::uint64_t seed = 0;
  std::string out_dir;
  int realizations = 0, threads = 0;
  long long na = 0;
  double dt = 0.0;

  std::vector<CLI::App*> runners;
  for (const char* name : {"analytic", "simulate", "compare", "sweep", "homogenize"}) {
    auto* sub = app.add_subcommand(name, std::string("run the experiment in ") + name + " mode");
    sub->add_option("--config", config_path, "experiment config (INI)")->required();
    sub->add_option("--seed", seed, "master seed");
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--realizations", realizations, "number of realizations");
    sub->add_option("--na", na, "molecules released per realization");
    sub->add_option("--dt-prime", dt, "dimensionless time step");
    sub->add_option("--threads", threads, "worker threads");
    runners.push_back(sub);
  }

  int level = 4;
  long long receptors = -1;
  std::uint64_t mesh_seed = 1;
  auto* mesh_info = app.add_subcommand("mesh-info", "print receiver mesh statistics");
  mesh_info->add_option("level", level, "subdivision level (0-6)")->required();
  mesh_info->add_option("--receptors", receptors, "receptor count M");
  mesh_info->add_option("--seed", mesh_seed, "receptor placement seed");

  std::vector<std::string> csvs;
  std::string svg_out, title;
  auto* render = app.add_subcommand("render", "draw CSV curves into an SVG chart");
  render->add_option("csv", csvs, "input CSV files")->required();
  render->add_option("-o,--output", svg_out, "output SVG (default: first CSV with .svg)");
  render->add_option("--title", title, "chart title");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("config", 2, e.what());
  }

  try {
    if (mesh_info->parsed()) {
      auto mesh = rrm::sim::build_mesh(level);
      const std::size_t M = receptors < 0 ? mesh.triangle_count() : static_cast<std::size_t>(receptors);
      mesh = rrm::sim::assign_receptors(std::move(mesh), M, mesh_seed);
      std::cout << "level=" << mesh.level() << " triangles=" << mesh.triangle_count()
                << " vertices=" << mesh.vertices().size() << " receptors=" << mesh.receptor_ids().size()
                << " total_area=" << mesh.total_area() << " mean_area=" << mesh.mean_triangle_area()
                << " area_ratio=" << mesh.area_ratio() << '\n';
      return 0;
    }
    if (render->parsed()) {
      std::vector<std::filesystem::path> inputs(csvs.begin(), csvs.end());
      std::filesystem::path target = svg_out.empty() ? std::filesystem::path(csvs.front()).replace_extension(".svg")
                                                     : std::filesystem::path(svg_out);
      rrm::io::render_svg(inputs, target, title);
      std::cout << "wrote " << target.string() << '\n';
      return 0;
    }
    for (auto* sub : runners) {
      if (!sub->parsed()) continue;
      auto cfg = rrm::cli::load_config(config_path);
      cfg.mode = rrm::cli::parse_mode(sub->get_name());
      if (sub->count("--seed")) ov.seed = seed;
      if (sub->count("--out")) ov.out = out_dir;
      if (sub->count("--realizations")) ov.realizations = realizations;
      if (sub->count("--na")) ov.na = na;
      if (sub->count("--dt-prime")) ov.dt = dt;
      if (sub->count("--threads")) ov.threads = threads;
      rrm::cli::apply_overrides(cfg, ov);
      return rrm::cli::run(cfg, std::cout);
    }
  } catch (const rrm::ConfigError& e) {
    return fail("config", 2, e.what());
  } catch (const rrm::DomainError& e) {
    return fail("domain", 2, e.what());
  } catch (const rrm::StepSizeError& e) {
    return fail("step_size", 3, e.what());
  } catch (const rrm::ConvergenceError& e) {
    return fail("convergence", 4, e.what());
  } catch (const std::exception& e) {
    return fail("io", 1, e.what());
  }
  return 0;
}
