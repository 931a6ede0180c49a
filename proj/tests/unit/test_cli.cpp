#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rrm/csv.hpp"
#include "rrm/errors.hpp"
#include "rrm/experiment.hpp"

using namespace rrm;
using namespace rrm::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("rrm_unit_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExperimentConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

const char* kBase = R"(
[experiment]
mode = analytic
name = base

[params]
kf = 10
kb = 1
kd = 0.5
r0 = 2
na = 1000

[grid]
start = 0.05
end = 2
count = 8
)";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("format_number round-trips") {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, 123456789.0, 0.0, -2.5}) CHECK(std::stod(io::format_number(v)) == v);
    CHECK(io::format_number(0.1) == "0.1");
    CHECK(io::format_number(std::numeric_limits<double>::infinity()) == "inf");
  }

  TEST_CASE("parse a full config") {
    const auto cfg = parse(std::string(kBase) + R"(
[receptors]
level = 3
count = 640

[sim]
dt_prime = 2.5e-4
realizations = 12
occupancy = true
seed = 77
bin_steps = 40
threads = 3

[sweep]
run = compare
kb = 0.5, 1
receptors = 100,200,300

[output]
dir = results
)");
    CHECK(cfg.mode == Mode::analytic);
    CHECK(cfg.name == "base");
    CHECK(cfg.dimensionless() == DimensionlessParams{10, 1, 0.5, 2, 1000});
    CHECK(cfg.level == 3);
    CHECK(cfg.receptors == 640);
    CHECK(cfg.sim.dt == 2.5e-4);
    CHECK(cfg.sim.occupancy);
    CHECK(cfg.sim.seed == 77);
    CHECK(cfg.sweep_run == Mode::compare);
    REQUIRE(cfg.sweep.size() == 2);
    CHECK(cfg.sweep[0].name == "kb");
    CHECK(cfg.sweep[1].values == std::vector<double>{100, 200, 300});
    CHECK(cfg.output == fs::path("results"));
    const auto m = cfg.resolved();
    CHECK(m.count("sim.threads") == 0);
    CHECK(m.at("sim.seed") == "77");
    CHECK(m.at("params.kf") == "10");
  }

  TEST_CASE("system parameters are converted") {
    const auto cfg = parse(R"(
[system]
receiver_radius = 0.5e-6
release_distance = 1e-6
diffusion = 5e-9
kf = 2.5e-14
kd = 1e4
)");
    const auto d = cfg.dimensionless();
    CHECK(d.r0 == doctest::Approx(2.0));
    CHECK(d.kf == doctest::Approx(10.0));
    CHECK(d.kd == doctest::Approx(0.5));
  }

  TEST_CASE("config errors") {
    CHECK_THROWS_AS(parse("[params]\nkf = 1\n[system]\nreceiver_radius = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse("[grid]\ncount = 5\n"), ConfigError);
    CHECK_THROWS_AS(parse("[params]\nkf = abc\n"), ConfigError);
    CHECK_THROWS_AS(parse("[params]\nkf = 1\nbogus = 2\n"), ConfigError);
    CHECK_THROWS_AS(parse("[params]\nkf = 1\n[grid]\ncount = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse("[params]\nkf = 1\n[sweep]\nfoo = 1,2\n"), ConfigError);
    CHECK_THROWS_AS(parse("[params]\nkf = -1\n"), ConfigError);
    CHECK_THROWS_AS(parse("[params]\nkf = 1\n[experiment]\nmode = plot\n"), ConfigError);
    CHECK_THROWS_AS(parse("[params\nkf = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse("[params]\nkf = 1\n[receptors]\nlevel = 2\ncount = 400\n"), ConfigError);
  }

  TEST_CASE("overrides") {
    auto cfg = parse(kBase);
    Overrides o;
    o.seed = 5;
    o.na = 42;
    o.dt = 1e-4;
    o.realizations = 3;
    apply_overrides(cfg, o);
    CHECK(cfg.sim.seed == 5);
    CHECK(cfg.dimensionless().molecules == 42);
    CHECK(cfg.sim.dt == 1e-4);
    o = {};
    o.realizations = 0;
    CHECK_THROWS_AS(apply_overrides(cfg, o), ConfigError);
  }

  TEST_CASE("analytic run writes the curve") {
    auto cfg = parse(kBase);
    cfg.output = scratch("analytic");
    std::ostringstream log;
    CHECK(run(cfg, log) == 0);
    const auto table = io::read_csv(cfg.output / "base.csv");
    CHECK(table.columns == std::vector<std::string>{"t_prime", "value"});
    CHECK(table.rows.size() == 8);
    CHECK(table.rows[3][1] == doctest::Approx(1000 * analytic::cir(table.rows[3][0], cfg.dimensionless())));
    bool has_version = false;
    for (const auto& line : table.metadata) has_version |= line.rfind("rrm ", 0) == 0;
    CHECK(has_version);
  }

  TEST_CASE("two-point curve") {
    analytic::SignalCurve c;
    c.times = {0.5, 1.0};
    c.values = {1.0, 2.0};
    const auto dir = scratch("two");
    io::emit_csv(c, dir / "c.csv");
    CHECK(slurp(dir / "c.csv") == "t_prime,value\n0.5,1\n1,2\n");
    analytic::SignalCurve empty;
    CHECK_THROWS(io::emit_csv(empty, dir / "e.csv"));
  }

  TEST_CASE("empty sweep equals the analytic run") {
    auto a = parse(kBase);
    a.output = scratch("sweep_empty");
    auto s = a;
    s.mode = Mode::sweep;
    std::ostringstream log;
    a.name = "x";
    s.name = "x";
    run(a, log);
    const std::string first = slurp(a.output / "x.csv");
    fs::remove(a.output / "x.csv");
    run(s, log);
    CHECK(slurp(s.output / "x.csv") == first);
  }

  TEST_CASE("receptor sweep orders the curves") {
    auto cfg = parse(std::string(kBase) + "[sweep]\nreceptors = 5120,4000,3000,2000,1000,500\n");
    cfg.mode = Mode::sweep;
    cfg.name = "fig6";
    cfg.output = scratch("sweep_m");
    std::ostringstream log;
    CHECK(run(cfg, log) == 0);
    const auto index = io::read_csv(cfg.output / "fig6_index.csv");
    CHECK(index.columns == std::vector<std::string>{"point", "file", "receptors", "status"});
    CHECK(index.rows.size() == 6);
    std::vector<io::CsvTable> curves;
    for (int i = 0; i < 6; ++i) curves.push_back(io::read_csv(cfg.output / ("fig6_" + std::to_string(i) + ".csv")));
    for (std::size_t row = 0; row < curves[0].rows.size(); ++row)
      for (int i = 1; i < 6; ++i) CHECK(curves[i].rows[row][1] < curves[i - 1].rows[row][1]);
  }

  TEST_CASE("compare run is deterministic and reports per bin") {
    auto cfg = parse(std::string(kBase) + R"(
[receptors]
level = 2

[sim]
dt_prime = 1e-3
realizations = 6
bin_steps = 100
)");
    cfg.mode = Mode::compare;
    std::get<DimensionlessParams>(cfg.params).molecules = 50;
    cfg.output = scratch("compare");
    std::ostringstream log;
    CHECK(run(cfg, log) == 0);
    const std::string sim1 = slurp(cfg.output / "base_sim.csv");
    const std::string rep1 = slurp(cfg.output / "base_report.json");
    CHECK(io::read_csv(cfg.output / "base_sim.csv").columns ==
          std::vector<std::string>{"t_prime", "value", "stderr"});
    CHECK(rep1.find("\"frac_bins_within_3se\"") != std::string::npos);
    cfg.sim.threads = 3;
    CHECK(run(cfg, log) == 0);
    CHECK(slurp(cfg.output / "base_sim.csv") == sim1);
    CHECK(slurp(cfg.output / "base_report.json") == rep1);
  }

  TEST_CASE("simulating an absorbing receiver is a step-size error") {
    auto cfg = parse(kBase);
    cfg.mode = Mode::simulate;
    std::get<DimensionlessParams>(cfg.params).kf = std::numeric_limits<double>::infinity();
    cfg.output = scratch("inf");
    std::ostringstream log;
    CHECK_THROWS_AS(run(cfg, log), StepSizeError);
  }

  TEST_CASE("compare skips empty bins") {
    sim::EnsembleResult r;
    r.curve.times = {1, 2, 3};
    r.curve.values = {1, 2, 3};
    r.std_error = {0.1, 0.1, 0.1};
    r.counts = {5, 0, 5};
    const auto rep = compare(r, DimensionlessParams{10, 1, 0.5, 2, 0});
    CHECK(rep.per_bin.size() == 3);
    CHECK(rep.frac_bins_within_3se == 0.0);
    CHECK(rep.max_abs_dev == doctest::Approx(3.0));
  }
}
