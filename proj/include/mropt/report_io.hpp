#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "mropt/driver.hpp"
#include "mropt/problems.hpp"
#include "mropt/types.hpp"

namespace mropt {

/// Full description of one benchmark run; every number in a report is
/// reproducible from it.
struct RunSpec {
  std::string problem;
  int n = 3;
  int j0 = 4;
  int levels = 3;
  double tol = 1e-6;
  std::string optimizer = "pattern_search";  ///< quasi_newton | pattern_search | oracle
  std::string mode = "mropt";                ///< mropt | direct | both
  unsigned seed = 0;
  std::string out = "report.csv";
  bool dump_solutions = false;
  bool dump_limit_basis = false;
  bool dump_smoothness = false;
  std::int64_t max_evals = 0;
};

/// One-line canonical form embedded in report headers.
std::string canonical_spec_string(const RunSpec& spec);

/// Throws std::invalid_argument naming the violated constraint.
void validate_run_spec(const RunSpec& spec);

/// Round-trip-exact decimal formatting (17 significant digits).
std::string format_double(double v);

void emit_report(const MrOptReport& report, const std::optional<Vec>& reference,
                 const RunSpec& spec, std::ostream& os);

/// Footer lines comparing MR/OPT evaluations against the direct baseline.
void emit_comparison(std::int64_t mropt_evals, std::int64_t direct_evals, std::ostream& os);

/// Lines "x,value" on the [0,1] grid implied by the vector length.
void dump_solution_1d(const Vec& z, std::ostream& os);
/// Lines "x,y,value", row-major (y outer).
void dump_solution_2d(const Mat& z, std::ostream& os);

Vec parse_solution_1d(std::istream& is);
Mat parse_solution_2d(std::istream& is);

/// Runs the experiment described by the run spec and writes the report files.
/// Exit codes: 0 success, 1 invalid spec, 2 optimizer failure, 3 I/O failure.
int run_experiment(const RunSpec& spec);

}  // namespace mropt
