#include <CLI11.hpp>

#include "mropt/report_io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"MR/OPT benchmark runner: multiresolution-accelerated black-box minimization"};

  mropt::RunSpec spec;
  app.add_option("--problem", spec.problem, "Benchmark: bvp1d, poisson2d, mins, morebv")
      ->required();
  app.add_option("--n", spec.n, "Prediction degree (1, 3 or 5)")->default_val(3);
  auto* j0_opt = app.add_option("--j0", spec.j0, "Coarsest cell count (default 4, 8 for n=5)");
  auto* lv_opt = app.add_option("--levels", spec.levels,
                                "Refinement levels (default 5 for bvp1d, 3 otherwise)");
  app.add_option("--tol", spec.tol, "Optimizer and ladder stopping tolerance")
      ->default_val(1e-6);
  app.add_option("--optimizer", spec.optimizer,
                 "quasi_newton, pattern_search, or oracle (direct solve, quadratic only)")
      ->default_val("pattern_search");
  app.add_option("--mode", spec.mode, "mropt, direct, or both")->default_val("mropt");
  app.add_option("--seed", spec.seed, "Run seed recorded in reports")->default_val(0);
  app.add_option("--out", spec.out, "Report CSV path")->default_val("report.csv");
  app.add_flag("--dump-solutions", spec.dump_solutions,
               "Write each sub-optimal solution next to the report");
  app.add_flag("--dump-limit-basis", spec.dump_limit_basis,
               "Write sampled limit basis functions of the chosen scheme");
  app.add_flag("--dump-smoothness", spec.dump_smoothness,
               "Write finite-difference derivative tables of the final solution (2D)");
  app.add_option("--max-evals", spec.max_evals, "Evaluation cap per optimizer call (0 = none)")
      ->default_val(0);

  CLI11_PARSE(app, argc, argv);

  if (j0_opt->count() == 0) spec.j0 = spec.n == 5 ? 8 : 4;
  if (lv_opt->count() == 0) spec.levels = spec.problem == "bvp1d" ? 5 : 3;

  return mropt::run_experiment(spec);
}
