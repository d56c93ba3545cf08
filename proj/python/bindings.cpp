#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "mropt/driver.hpp"
#include "mropt/mr1d.hpp"
#include "mropt/mr2d.hpp"
#include "mropt/problems.hpp"
#include "mropt/report_io.hpp"

namespace py = pybind11;
using namespace mropt;

namespace {

MrOptConfig build_config(const ProblemInstance& problem, int degree, double tol,
                         const std::string& optimizer, std::int64_t max_evals,
                         bool quadratic_fast_path, unsigned seed) {
  MrOptConfig cfg{PredictionScheme::make(degree), problem.hierarchy};
  cfg.tol_m = tol;
  cfg.boundary_mask = problem.boundary_mask;
  cfg.oracle_mode = optimizer == "oracle";
  cfg.optimizer = optimizer == "pattern_search" ? OptimizerKind::pattern_search
                                                : OptimizerKind::quasi_newton;
  if (optimizer != "oracle" && optimizer != "pattern_search" && optimizer != "quasi_newton")
    throw std::invalid_argument("optimizer must be quasi_newton, pattern_search or oracle");
  cfg.quadratic_fast_path = quadratic_fast_path;
  cfg.opt.tol_x = tol;
  cfg.opt.max_evals = max_evals;
  cfg.opt.seed = seed;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multiresolution-accelerated black-box minimization (MR/OPT)";

  py::class_<GridHierarchy>(m, "GridHierarchy")
      .def(py::init<int, int, int>(), py::arg("j0"), py::arg("levels"), py::arg("dim") = 1)
      .def_property_readonly("j0", &GridHierarchy::j0)
      .def_property_readonly("levels", &GridHierarchy::levels)
      .def_property_readonly("dim", &GridHierarchy::dim)
      .def("points", &GridHierarchy::points, py::arg("level"))
      .def("cells", &GridHierarchy::cells, py::arg("level"))
      .def("spacing", &GridHierarchy::spacing, py::arg("level"));

  py::class_<PredictionScheme>(m, "PredictionScheme")
      .def(py::init(&PredictionScheme::make), py::arg("degree"))
      .def_property_readonly("degree", &PredictionScheme::degree)
      .def_property_readonly("interior_weights", &PredictionScheme::interior_weights)
      .def_property_readonly("left_boundary_rows", &PredictionScheme::left_boundary_rows);

  m.def("decimate", &decimate, py::arg("fine"));
  m.def(
      "predict_two_level",
      [](const Vec& coarse, int degree) {
        return predict_two_level(coarse, PredictionScheme::make(degree));
      },
      py::arg("coarse"), py::arg("degree"));
  m.def(
      "predict_multilevel",
      [](const Vec& coarse, int refinements, int degree) {
        return predict_multilevel(coarse, refinements, PredictionScheme::make(degree));
      },
      py::arg("coarse"), py::arg("refinements"), py::arg("degree"));
  m.def(
      "forward_full",
      [](const Vec& z, int base_level, int top_level, int degree) {
        const MultiResData rep =
            forward_full(z, base_level, top_level, PredictionScheme::make(degree));
        return py::make_tuple(rep.coarse, rep.details);
      },
      py::arg("z"), py::arg("base_level"), py::arg("top_level"), py::arg("degree"),
      "Returns (coarse, [d_base, ..., d_{top-1}])");
  m.def(
      "inverse_full",
      [](const Vec& coarse, const std::vector<Vec>& details, int degree) {
        MultiResData rep;
        rep.coarse = coarse;
        rep.details = details;
        rep.base_level = 0;
        rep.top_level = static_cast<int>(details.size());
        return inverse_full(rep, PredictionScheme::make(degree));
      },
      py::arg("coarse"), py::arg("details"), py::arg("degree"));
  m.def(
      "predict_multilevel_2d",
      [](const Mat& coarse, int refinements, int degree) {
        return predict_multilevel_2d(coarse, refinements, PredictionScheme::make(degree));
      },
      py::arg("coarse"), py::arg("refinements"), py::arg("degree"));
  m.def(
      "forward_full_2d",
      [](const Mat& z, int base_level, int top_level, int degree) {
        const MultiResData2 rep =
            forward_full_2d(z, base_level, top_level, PredictionScheme::make(degree));
        py::list blocks;
        for (const DetailBlocks2& d : rep.details)
          blocks.append(py::make_tuple(d.odd_x, d.odd_y, d.odd_xy));
        return py::make_tuple(rep.coarse, blocks);
      },
      py::arg("z"), py::arg("base_level"), py::arg("top_level"), py::arg("degree"),
      "Returns (coarse, [(odd_x, odd_y, odd_xy), ...])");
  m.def(
      "inverse_full_2d",
      [](const Mat& coarse, const std::vector<std::tuple<Mat, Mat, Mat>>& details, int degree) {
        MultiResData2 rep;
        rep.coarse = coarse;
        for (const auto& [dx, dy, dxy] : details) rep.details.push_back({dx, dy, dxy});
        rep.base_level = 0;
        rep.top_level = static_cast<int>(details.size());
        return inverse_full_2d(rep, PredictionScheme::make(degree));
      },
      py::arg("coarse"), py::arg("details"), py::arg("degree"));
  m.def(
      "sample_limit_basis",
      [](int j0, int base_level, int index, int refinements, int degree) {
        return sample_limit_basis(GridHierarchy(j0, base_level), base_level, index, refinements,
                                  PredictionScheme::make(degree));
      },
      py::arg("j0"), py::arg("base_level"), py::arg("index"), py::arg("refinements"),
      py::arg("degree"));
  m.def(
      "property_s_probe",
      [](int degree, int j0, int levels, int trials, unsigned seed) {
        const StabilityEstimate est =
            property_s_probe(PredictionScheme::make(degree), GridHierarchy(j0, levels), trials,
                             seed);
        return py::make_tuple(est.d1, est.d2);
      },
      py::arg("degree"), py::arg("j0"), py::arg("levels"), py::arg("trials") = 50,
      py::arg("seed") = 0, "Returns the empirical (d1, d2) stability bounds");

  py::class_<ProblemInstance>(m, "Problem")
      .def_readonly("name", &ProblemInstance::name)
      .def_readonly("initial_guess", &ProblemInstance::initial_guess)
      .def_readonly("boundary_mask", &ProblemInstance::boundary_mask)
      .def_property_readonly("hierarchy",
                             [](const ProblemInstance& p) { return p.hierarchy; })
      .def_property_readonly("reference_solution",
                             [](const ProblemInstance& p) -> std::optional<Vec> {
                               return p.reference_solution;
                             })
      .def("evaluate", [](const ProblemInstance& p, const Vec& z) { return p.objective(z); },
           py::arg("z"))
      .def_property_readonly(
          "evaluations",
          [](const ProblemInstance& p) { return p.objective.evaluations(); })
      .def("__repr__", [](const ProblemInstance& p) {
        return "<mropt.Problem '" + p.name + "'>";
      });

  m.def(
      "make_problem",
      [](const std::string& name, int j0, int levels) {
        return make_problem(name, GridHierarchy(j0, levels, name == "bvp1d" ? 1 : 2));
      },
      py::arg("name"), py::arg("j0") = 4, py::arg("levels") = 3,
      "bvp1d, poisson2d, mins or morebv on a dyadic ladder");

  py::class_<LevelRecord>(m, "LevelRecord")
      .def_readonly("level", &LevelRecord::level)
      .def_readonly("dof", &LevelRecord::dof)
      .def_readonly("evals", &LevelRecord::evals)
      .def_readonly("step_inf_norm", &LevelRecord::step_inf_norm)
      .def_readonly("f_value", &LevelRecord::f_value)
      .def_readonly("eps_inf_norm", &LevelRecord::eps_inf_norm)
      .def_property_readonly("status",
                             [](const LevelRecord& r) { return to_string(r.status); });

  py::class_<MrOptReport>(m, "Report")
      .def_readonly("levels", &MrOptReport::levels)
      .def_readonly("suboptimal", &MrOptReport::suboptimal)
      .def_readonly("total_evals", &MrOptReport::total_evals)
      .def_readonly("stopped_early", &MrOptReport::stopped_early)
      .def_readonly("oracle_counts", &MrOptReport::oracle_counts)
      .def_readonly("decay_rates", &MrOptReport::decay_rates);

  m.def(
      "run_mropt",
      [](const ProblemInstance& problem, int degree, double tol, const std::string& optimizer,
         std::int64_t max_evals, bool quadratic_fast_path, unsigned seed) {
        const MrOptConfig cfg = build_config(problem, degree, tol, optimizer, max_evals,
                                             quadratic_fast_path, seed);
        return run_mropt(problem.objective, problem.initial_guess, cfg);
      },
      py::arg("problem"), py::arg("degree") = 3, py::arg("tol") = 1e-6,
      py::arg("optimizer") = "quasi_newton", py::arg("max_evals") = 0,
      py::arg("quadratic_fast_path") = false, py::arg("seed") = 0,
      "Coarse-to-fine ladder of auxiliary minimizations");

  m.def(
      "run_direct",
      [](const ProblemInstance& problem, int degree, double tol, const std::string& optimizer,
         std::int64_t max_evals, unsigned seed) {
        const MrOptConfig cfg =
            build_config(problem, degree, tol, optimizer, max_evals, false, seed);
        const DirectResult res = run_direct(problem.objective, problem.initial_guess, cfg);
        return py::make_tuple(res.x, res.f, res.evals, to_string(res.status));
      },
      py::arg("problem"), py::arg("degree") = 3, py::arg("tol") = 1e-6,
      py::arg("optimizer") = "quasi_newton", py::arg("max_evals") = 0, py::arg("seed") = 0,
      "Single optimizer call at the finest level; returns (x, f, evals, status)");

  m.def(
      "smoothness_probe",
      [](const Mat& z) {
        const SmoothnessTables t = smoothness_probe(z);
        return py::make_tuple(t.third_x, t.third_y, t.second_x, t.second_y);
      },
      py::arg("z"), "Returns (third_x, third_y, second_x, second_y) difference tables");

  m.attr("__version__") = "0.1.0";
}
