#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "rrm/analytic.hpp"
#include "rrm/errors.hpp"
#include "rrm/experiment.hpp"
#include "rrm/homogenization.hpp"
#include "rrm/oracle.hpp"
#include "rrm/simulator.hpp"
#include "rrm/specfun.hpp"
#include "rrm/units.hpp"
#include "rrm/version.hpp"

namespace py = pybind11;
using namespace rrm;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Reversible-reaction receiver models";
  m.attr("__version__") = kVersion;

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<StepSizeError>(m, "StepSizeError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());

  py::class_<DimensionlessParams>(m, "DimensionlessParams")
      .def(py::init([](double kf, double kb, double kd, double r0, double na) {
             DimensionlessParams p{kf, kb, kd, r0, na};
             p.validate();
             return p;
           }),
           py::arg("kf"), py::arg("kb") = 0.0, py::arg("kd") = 0.0, py::arg("r0") = 2.0, py::arg("na") = 1.0)
      .def_readwrite("kf", &DimensionlessParams::kf)
      .def_readwrite("kb", &DimensionlessParams::kb)
      .def_readwrite("kd", &DimensionlessParams::kd)
      .def_readwrite("r0", &DimensionlessParams::r0)
      .def_readwrite("na", &DimensionlessParams::molecules)
      .def("__eq__", [](const DimensionlessParams& a, const DimensionlessParams& b) { return a == b; })
      .def("__repr__", [](const DimensionlessParams& p) {
        std::ostringstream os;
        os << "DimensionlessParams(kf=" << p.kf << ", kb=" << p.kb << ", kd=" << p.kd << ", r0=" << p.r0
           << ", na=" << p.molecules << ")";
        return os.str();
      });

  py::class_<SystemParams>(m, "SystemParams")
      .def(py::init([](double a, double r0, double D, double kf, double kb, double kd, long long na) {
             SystemParams s;
             s.receiver_radius = a;
             s.release_distance = r0;
             s.diffusion = D;
             s.kf = kf;
             s.kb = kb;
             s.kd = kd;
             s.molecules = na;
             s.validate();
             return s;
           }),
           py::arg("receiver_radius"), py::arg("release_distance"), py::arg("diffusion"), py::arg("kf"),
           py::arg("kb") = 0.0, py::arg("kd") = 0.0, py::arg("na") = 1)
      .def_readwrite("receiver_radius", &SystemParams::receiver_radius)
      .def_readwrite("release_distance", &SystemParams::release_distance)
      .def_readwrite("diffusion", &SystemParams::diffusion)
      .def_readwrite("kf", &SystemParams::kf)
      .def_readwrite("kb", &SystemParams::kb)
      .def_readwrite("kd", &SystemParams::kd)
      .def_readwrite("na", &SystemParams::molecules);

  m.def("to_dimensionless", &to_dimensionless);
  m.def("to_dimensionless_time", &to_dimensionless_time, py::arg("t_seconds"), py::arg("params"));
  m.def("to_dimensional_time", &to_dimensional_time, py::arg("t_prime"), py::arg("params"));

  m.def("erfcx", py::overload_cast<specfun::Complex>(&specfun::erfcx), py::arg("z"));
  m.def("wfun", &specfun::wfun, py::arg("n"), py::arg("m"));

  m.def(
      "solve_roots",
      [](const DimensionlessParams& p) {
        const auto r = analytic::solve_roots(p);
        return py::make_tuple(r.alpha, r.beta, r.gamma);
      },
      py::arg("params"));
  m.def("cir", &analytic::cir, py::arg("t"), py::arg("params"));
  m.def("greens_function", &analytic::greens_function, py::arg("r"), py::arg("t"), py::arg("params"));
  m.def("cir_asymptote", &analytic::cir_asymptote, py::arg("params"));
  m.def(
      "expected_signal",
      [](const std::vector<double>& grid, const DimensionlessParams& p) {
        return analytic::expected_signal(grid, p).values;
      },
      py::arg("grid"), py::arg("params"));

  m.def("invert_cir", &oracle::invert_cir, py::arg("t"), py::arg("params"), py::arg("nodes") = 64);
  m.def("invert_greens", &oracle::invert_greens, py::arg("r"), py::arg("t"), py::arg("params"),
        py::arg("nodes") = 64);

  py::class_<homog::ReceptorLayoutParams>(m, "ReceptorLayout")
      .def_static("circular", &homog::ReceptorLayoutParams::circular, py::arg("M"), py::arg("rs"))
      .def_static("from_mesh", &homog::ReceptorLayoutParams::from_mesh, py::arg("M"), py::arg("M_max"))
      .def_readonly("M", &homog::ReceptorLayoutParams::M)
      .def_readonly("rs", &homog::ReceptorLayoutParams::rs)
      .def_readonly("coverage", &homog::ReceptorLayoutParams::coverage_lambda);
  m.def("correction_factor", &homog::correction_factor, py::arg("layout"), py::arg("kf"));
  m.def("effective_forward_rate", &homog::effective_forward_rate, py::arg("kf"), py::arg("phi"));
  m.def("berg_purcell_factor", &homog::berg_purcell_factor, py::arg("layout"));
  m.def("zwanzig_factor", &homog::zwanzig_factor, py::arg("layout"));
  m.def("finite_receptor_params", &homog::finite_receptor_params, py::arg("params"), py::arg("layout"));

  m.def(
      "simulate",
      [](const DimensionlessParams& p, double dt, int realizations, double horizon, bool occupancy,
         std::uint64_t seed, int level, long long receptors, int bin_steps, int threads) {
        sim::SimConfig cfg;
        cfg.params = p;
        cfg.dt = dt;
        cfg.realizations = realizations;
        cfg.horizon = horizon;
        cfg.occupancy = occupancy;
        cfg.seed = seed;
        cfg.level = level;
        cfg.receptors = receptors;
        cfg.bin_steps = bin_steps;
        cfg.threads = threads;
        sim::EnsembleResult res;
        {
          py::gil_scoped_release release;
          res = sim::run_ensemble(cfg);
        }
        py::dict out;
        out["t"] = res.curve.times;
        out["mean"] = res.curve.values;
        out["stderr"] = res.std_error;
        return out;
      },
      py::arg("params"), py::arg("dt") = 1e-3, py::arg("realizations") = 200, py::arg("horizon") = 4.0,
      py::arg("occupancy") = false, py::arg("seed") = 1, py::arg("level") = 4, py::arg("receptors") = -1,
      py::arg("bin_steps") = 200, py::arg("threads") = 1);

  m.def(
      "run_config",
      [](const std::string& path, std::optional<std::string> out_dir) {
        auto cfg = cli::load_config(path);
        if (out_dir) cfg.output = *out_dir;
        std::ostringstream log;
        const int rc = cli::run(cfg, log);
        return py::make_tuple(rc, log.str());
      },
      py::arg("path"), py::arg("out_dir") = py::none());
}
