#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "splitsim/analysis.hpp"
#include "splitsim/config.hpp"
#include "splitsim/report.hpp"
#include "splitsim/sweep.hpp"

namespace py = pybind11;
using namespace splitsim;

namespace {

py::dict record_to_dict(const RunRecord& rec) {
    py::dict d;
    d["experiment"] = std::string(to_string(rec.key.experiment));
    d["profile"] = std::string(to_string(rec.key.profile));
    d["n"] = rec.key.n;
    d["seed"] = rec.key.seed;
    if (rec.result) {
        d["result"] = *rec.result;
        d["error"] = py::none();
    } else {
        d["result"] = py::none();
        d["error"] = rec.error;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_splitsim, m) {
    m.doc() = "Coverage simulator for n disk agents sharing a fixed total footprint.";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::enum_<ProfileKind>(m, "ProfileKind")
        .value("constant", ProfileKind::constant)
        .value("linear", ProfileKind::linear)
        .value("radius", ProfileKind::radius)
        .value("area", ProfileKind::area);

    py::enum_<Mode>(m, "Mode").value("walk", Mode::walk).value("teleport", Mode::teleport);

    py::class_<VelocityProfile>(m, "VelocityProfile")
        .def(py::init<>())
        .def_readwrite("kind", &VelocityProfile::kind)
        .def_readwrite("v0", &VelocityProfile::v0)
        .def_readwrite("gamma", &VelocityProfile::gamma);

    py::class_<WalkParams>(m, "WalkParams")
        .def(py::init<>())
        .def_readwrite("alpha", &WalkParams::alpha)
        .def_readwrite("rho", &WalkParams::rho)
        .def_readwrite("mu", &WalkParams::mu)
        .def_readwrite("delta_min", &WalkParams::delta_min)
        .def_readwrite("delta_max", &WalkParams::delta_max);

    py::class_<CollisionParams>(m, "CollisionParams")
        .def(py::init<>())
        .def_readwrite("enabled", &CollisionParams::enabled)
        .def_readwrite("residual", &CollisionParams::residual)
        .def_readwrite("failed_obstruct", &CollisionParams::failed_obstruct);

    py::class_<FailureParams>(m, "FailureParams")
        .def(py::init<>())
        .def(py::init([](double beta, double alpha) { return FailureParams{true, beta, alpha}; }),
             py::arg("beta"), py::arg("alpha"))
        .def_readwrite("enabled", &FailureParams::enabled)
        .def_readwrite("beta", &FailureParams::beta)
        .def_readwrite("alpha", &FailureParams::alpha);

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("p", &SimConfig::p)
        .def_readwrite("total_area", &SimConfig::total_area)
        .def_readwrite("n", &SimConfig::n)
        .def_readwrite("m", &SimConfig::m)
        .def_readwrite("profile", &SimConfig::profile)
        .def_readwrite("walk", &SimConfig::walk)
        .def_readwrite("collisions", &SimConfig::collisions)
        .def_readwrite("failures", &SimConfig::failures)
        .def_readwrite("mode", &SimConfig::mode)
        .def_readwrite("max_steps", &SimConfig::max_steps)
        .def_readwrite("record_every", &SimConfig::record_every)
        .def_readwrite("seed", &SimConfig::seed)
        .def("validate", &SimConfig::validate);

    py::class_<RunResult>(m, "RunResult")
        .def_property_readonly("t",
                               [](const RunResult& r) {
                                   std::vector<std::int64_t> out;
                                   for (const auto& s : r.series.samples) out.push_back(s.t);
                                   return out;
                               })
        .def_property_readonly("coverage",
                               [](const RunResult& r) {
                                   std::vector<double> out;
                                   for (const auto& s : r.series.samples) out.push_back(s.coverage);
                                   return out;
                               })
        .def_property_readonly("alive",
                               [](const RunResult& r) {
                                   std::vector<std::int64_t> out;
                                   for (const auto& s : r.survivors) out.push_back(s.alive);
                                   return out;
                               })
        .def_property_readonly("t_f", [](const RunResult& r) { return r.series.t_f; })
        .def_readonly("config", &RunResult::config)
        .def_readonly("steps_executed", &RunResult::steps_executed)
        .def_readonly("wall_seconds", &RunResult::wall_seconds);

    py::class_<CoverageGrid>(m, "CoverageGrid")
        .def(py::init<int, double>(), py::arg("m"), py::arg("p") = 1.0)
        .def("stamp_disk",
             [](CoverageGrid& g, double x, double y, double r) { return g.stamp_disk(Position{x, y}, r); },
             py::arg("x"), py::arg("y"), py::arg("r"))
        .def("coverage_percent", [](const CoverageGrid& g) { return coverage_percent(g); })
        .def_property_readonly("covered_count", &CoverageGrid::covered_count)
        .def_property_readonly("m", &CoverageGrid::m)
        .def("recount", &CoverageGrid::recount);

    py::class_<SweepSpec>(m, "SweepSpec")
        .def_property_readonly("experiment", [](const SweepSpec& s) { return std::string(to_string(s.experiment)); })
        .def_readwrite("base", &SweepSpec::base)
        .def_readwrite("n_values", &SweepSpec::n_values)
        .def_readwrite("profiles", &SweepSpec::profiles)
        .def_readwrite("seeds", &SweepSpec::seeds)
        .def("reseed", &SweepSpec::reseed);

    m.def("wrap_position",
          [](double x, double y, double p) {
              const Position w = wrap_position({x, y}, p);
              return std::make_pair(w.x, w.y);
          },
          py::arg("x"), py::arg("y"), py::arg("p") = 1.0);
    m.def("torus_delta",
          [](std::pair<double, double> a, std::pair<double, double> b, double p) {
              const Vec2 d = torus_delta({a.first, a.second}, {b.first, b.second}, p);
              return std::make_pair(d.x, d.y);
          },
          py::arg("a"), py::arg("b"), py::arg("p") = 1.0);
    m.def("disk_overlap_area", &disk_overlap_area, py::arg("d"), py::arg("r"));
    m.def("radius_from_split", &radius_from_split, py::arg("total_area"), py::arg("n"));
    m.def("cells_in_disk",
          [](double x, double y, double r, int cells, double p) { return cells_in_disk({x, y}, r, cells, p); },
          py::arg("x"), py::arg("y"), py::arg("r"), py::arg("m"), py::arg("p") = 1.0);

    m.def("velocity",
          [](const std::string& kind, std::int64_t n, double v0, double gamma) {
              return velocity({parse_profile_kind(kind), v0, gamma}, n);
          },
          py::arg("kind"), py::arg("n"), py::arg("v0") = 0.005, py::arg("gamma") = 4e-6);
    m.def("initial_rate",
          [](const std::string& kind, std::int64_t n, double area, double v0, double gamma) {
              return initial_rate(parse_profile_kind(kind), n, area, v0, gamma);
          },
          py::arg("kind"), py::arg("n"), py::arg("total_area"), py::arg("v0") = 0.005, py::arg("gamma") = 4e-6);
    m.def("optimal_n_linear", &optimal_n_linear, py::arg("v0"), py::arg("gamma"));
    m.def("ideal_teleport_increment", &ideal_teleport_increment, py::arg("total_area"), py::arg("p") = 1.0);
    m.def("failure_rate",
          [](std::int64_t n, double beta, double alpha) { return failure_rate(n, {true, beta, alpha}); },
          py::arg("n"), py::arg("beta"), py::arg("alpha"));
    m.def("expected_survivor_fraction",
          [](std::int64_t n, double beta, double alpha, std::int64_t t) {
              return expected_survivor_fraction(n, {true, beta, alpha}, t);
          },
          py::arg("n"), py::arg("beta"), py::arg("alpha"), py::arg("t"));

    m.def("simulate", &simulate, py::arg("config"), py::arg("seed"), py::call_guard<py::gil_scoped_release>());

    m.def("parse_config", [](const std::filesystem::path& p) { return parse_config(p); }, py::arg("path"));
    m.def("parse_config_text", [](const std::string& text) { return parse_config_text(text); }, py::arg("text"));

    m.def("run_sweep",
          [](const SweepSpec& spec, int jobs) {
              std::vector<RunRecord> records;
              {
                  py::gil_scoped_release release;
                  records = run_sweep(spec, {jobs, nullptr});
              }
              py::list out;
              for (const auto& r : records) out.append(record_to_dict(r));
              return out;
          },
          py::arg("spec"), py::arg("jobs") = 1);

    // Sweep + CSV in one call; returns the CSV text, or writes it when a path is given.
    m.def("write_csv",
          [](const SweepSpec& spec, int jobs, std::optional<std::filesystem::path> path) -> py::object {
              std::vector<RunRecord> records;
              {
                  py::gil_scoped_release release;
                  records = run_sweep(spec, {jobs, nullptr});
              }
              if (path) {
                  write_csv(records, *path);
                  return py::none();
              }
              std::ostringstream out;
              write_csv(records, out);
              return py::str(out.str());
          },
          py::arg("spec"), py::arg("jobs") = 1, py::arg("path") = py::none());

    m.def("summarize",
          [](const SweepSpec& spec, int jobs) {
              std::vector<RunRecord> records;
              {
                  py::gil_scoped_release release;
                  records = run_sweep(spec, {jobs, nullptr});
              }
              py::list out;
              for (const auto& row : summarize(records)) {
                  py::dict d;
                  d["experiment"] = std::string(to_string(row.experiment));
                  d["profile"] = std::string(to_string(row.profile));
                  d["n"] = row.n;
                  d["t"] = row.t;
                  d["mean"] = row.mean;
                  d["std"] = row.stddev;
                  d["runs"] = row.runs;
                  d["tf_median"] = row.tf_median;
                  d["tf_censored"] = row.tf_censored;
                  out.append(d);
              }
              return out;
          },
          py::arg("spec"), py::arg("jobs") = 1);
}
