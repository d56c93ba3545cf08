#include "mropt/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mropt/mr1d.hpp"
#include "mropt/mr2d.hpp"

namespace mropt {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string canonical_spec_string(const RunSpec& spec) {
  std::ostringstream os;
  os << "problem=" << spec.problem << " n=" << spec.n << " j0=" << spec.j0
     << " levels=" << spec.levels << " tol=" << format_double(spec.tol)
     << " optimizer=" << spec.optimizer << " mode=" << spec.mode << " seed=" << spec.seed
     << " max_evals=" << spec.max_evals;
  return os.str();
}

void validate_run_spec(const RunSpec& spec) {
  static const std::set<std::string> problems = {"bvp1d", "poisson2d", "mins", "morebv"};
  static const std::set<std::string> optimizers = {"quasi_newton", "pattern_search", "oracle"};
  static const std::set<std::string> modes = {"mropt", "direct", "both"};
  if (!problems.count(spec.problem))
    throw std::invalid_argument("invalid spec: unknown problem '" + spec.problem + "'");
  if (spec.n != 1 && spec.n != 3 && spec.n != 5)
    throw std::invalid_argument("invalid spec: n must be 1, 3 or 5");
  if (spec.j0 < 1) throw std::invalid_argument("invalid spec: j0 must be >= 1");
  if (spec.j0 < spec.n)
    throw std::invalid_argument("invalid spec: j0 must be >= n (boundary stencils need n+1 "
                                "coarse points)");
  if (spec.levels < 0) throw std::invalid_argument("invalid spec: levels must be >= 0");
  if (!(spec.tol > 0.0)) throw std::invalid_argument("invalid spec: tol must be > 0");
  if (!optimizers.count(spec.optimizer))
    throw std::invalid_argument("invalid spec: unknown optimizer '" + spec.optimizer + "'");
  if (!modes.count(spec.mode))
    throw std::invalid_argument("invalid spec: unknown mode '" + spec.mode + "'");
  if (spec.optimizer == "oracle" && spec.problem != "bvp1d" && spec.problem != "poisson2d")
    throw std::invalid_argument("invalid spec: oracle optimizer requires a quadratic problem "
                                "(bvp1d or poisson2d)");
  if (spec.dump_smoothness && spec.problem == "bvp1d")
    throw std::invalid_argument("invalid spec: --dump-smoothness requires a 2D problem");
  if (spec.max_evals < 0) throw std::invalid_argument("invalid spec: max-evals must be >= 0");
  if (spec.out.empty()) throw std::invalid_argument("invalid spec: output path is empty");
}

void emit_report(const MrOptReport& report, const std::optional<Vec>& reference,
                 const RunSpec& spec, std::ostream& os) {
  os << "# spec: " << canonical_spec_string(spec) << "\n";
  os << "# seed: " << spec.seed << "\n";
  os << "level,N_k,evals_k,step_inf_norm,F_value,err_vs_reference,decay_rate\n";
  for (std::size_t k = 0; k < report.levels.size(); ++k) {
    const LevelRecord& rec = report.levels[k];
    os << rec.level << ',' << rec.dof << ',' << rec.evals << ','
       << format_double(rec.step_inf_norm) << ',' << format_double(rec.f_value) << ',';
    if (reference)
      os << format_double((report.suboptimal[k + 1] - *reference).lpNorm<Eigen::Infinity>());
    os << ',';
    const double rate = k < report.decay_rates.size() ? report.decay_rates[k]
                                                      : std::numeric_limits<double>::quiet_NaN();
    if (std::isfinite(rate)) os << format_double(rate);
    os << "\n";
  }
  os << "total_evals," << report.total_evals << "\n";
  os << "stopped_early," << (report.stopped_early ? "true" : "false") << "\n";
}

void emit_comparison(std::int64_t mropt_evals, std::int64_t direct_evals, std::ostream& os) {
  os << "direct_evals," << direct_evals << "\n";
  const double ratio = direct_evals > 0
                           ? static_cast<double>(mropt_evals) / static_cast<double>(direct_evals)
                           : std::numeric_limits<double>::quiet_NaN();
  os << "eval_ratio," << format_double(ratio) << "\n";
}

void dump_solution_1d(const Vec& z, std::ostream& os) {
  const int J = static_cast<int>(z.size()) - 1;
  for (int i = 0; i <= J; ++i)
    os << format_double(static_cast<double>(i) / J) << ',' << format_double(z[i]) << "\n";
}

void dump_solution_2d(const Mat& z, std::ostream& os) {
  const int J = static_cast<int>(z.rows()) - 1;
  for (int iy = 0; iy <= J; ++iy)
    for (int ix = 0; ix <= J; ++ix)
      os << format_double(static_cast<double>(ix) / J) << ','
         << format_double(static_cast<double>(iy) / J) << ',' << format_double(z(iy, ix))
         << "\n";
}

Vec parse_solution_1d(std::istream& is) {
  std::vector<double> values;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("parse_solution_1d: malformed line '" + line + "'");
    values.push_back(std::stod(line.substr(comma + 1)));
  }
  Vec z(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) z[i] = values[i];
  return z;
}

Mat parse_solution_2d(std::istream& is) {
  std::vector<double> values;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto first = line.find(',');
    const auto second = line.find(',', first + 1);
    if (first == std::string::npos || second == std::string::npos)
      throw std::runtime_error("parse_solution_2d: malformed line '" + line + "'");
    values.push_back(std::stod(line.substr(second + 1)));
  }
  const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(values.size()))));
  if (static_cast<std::size_t>(side) * side != values.size())
    throw std::runtime_error("parse_solution_2d: point count is not a perfect square");
  Mat z(side, side);
  for (int iy = 0; iy < side; ++iy)
    for (int ix = 0; ix < side; ++ix) z(iy, ix) = values[iy * side + ix];
  return z;
}

namespace {

std::string out_stem(const std::string& path) {
  const auto dot = path.rfind('.');
  const auto slash = path.find_last_of("/\\");
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path;
  return path.substr(0, dot);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::trunc);
  if (!os) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  return os;
}

void write_vector_file(const std::string& path, const Vec& z, int dim, int side) {
  std::ofstream os = open_out(path);
  if (dim == 1)
    dump_solution_1d(z, os);
  else
    dump_solution_2d(unflatten_rowmajor(z, side), os);
  if (!os) throw std::ios_base::failure("failed writing '" + path + "'");
}

MrOptConfig config_from_spec(const RunSpec& spec, const ProblemInstance& problem) {
  MrOptConfig config{PredictionScheme::make(spec.n), problem.hierarchy};
  config.tol_m = spec.tol;
  config.boundary_mask = problem.boundary_mask;
  config.oracle_mode = spec.optimizer == "oracle";
  config.optimizer = spec.optimizer == "pattern_search" ? OptimizerKind::pattern_search
                                                        : OptimizerKind::quasi_newton;
  config.opt.tol_x = spec.tol;
  config.opt.max_evals = spec.max_evals;
  config.opt.seed = spec.seed;
  return config;
}

bool level_failed(const MrOptReport& report) {
  for (const LevelRecord& rec : report.levels)
    if (rec.status != OptStatus::converged) return true;
  return false;
}

}  // namespace

int run_experiment(const RunSpec& spec) {
  try {
    validate_run_spec(spec);
  } catch (const std::invalid_argument& err) {
    std::cerr << err.what() << "\n";
    return 1;
  }

  try {
    const int dim = spec.problem == "bvp1d" ? 1 : 2;
    const GridHierarchy hierarchy(spec.j0, spec.levels, dim);
    ProblemInstance problem = make_problem(spec.problem, hierarchy);
    const MrOptConfig config = config_from_spec(spec, problem);
    const std::string stem = out_stem(spec.out);
    const int side = hierarchy.points(hierarchy.levels());

    bool failed = false;
    MrOptReport report;
    DirectResult direct;
    const bool want_mropt = spec.mode == "mropt" || spec.mode == "both";
    const bool want_direct = spec.mode == "direct" || spec.mode == "both";

    if (want_mropt) {
      report = run_mropt(problem.objective, problem.initial_guess, config);
      failed = failed || level_failed(report);
    }
    if (want_direct) {
      direct = run_direct(problem.objective, problem.initial_guess, config);
      failed = failed || direct.status != OptStatus::converged;
    }

    {
      std::ofstream os = open_out(spec.out);
      if (want_mropt) {
        emit_report(report, problem.reference_solution, spec, os);
        if (want_direct) emit_comparison(report.total_evals, direct.evals, os);
      } else {
        os << "# spec: " << canonical_spec_string(spec) << "\n";
        os << "# seed: " << spec.seed << "\n";
        os << "direct_evals," << direct.evals << "\n";
        os << "direct_f," << format_double(direct.f) << "\n";
        os << "direct_status," << to_string(direct.status) << "\n";
        if (problem.reference_solution)
          os << "direct_err,"
             << format_double(
                    (direct.x - *problem.reference_solution).lpNorm<Eigen::Infinity>())
             << "\n";
      }
      if (!os) throw std::ios_base::failure("failed writing '" + spec.out + "'");
    }

    if (spec.dump_solutions) {
      if (want_mropt)
        for (std::size_t k = 0; k < report.suboptimal.size(); ++k)
          write_vector_file(stem + "_sol" + std::to_string(k) + ".txt", report.suboptimal[k],
                            dim, side);
      if (want_direct) write_vector_file(stem + "_direct.txt", direct.x, dim, side);
    }

    if (spec.dump_limit_basis) {
      const PredictionScheme scheme = PredictionScheme::make(spec.n);
      const int refinements = 8;
      for (int index : {0, 1, spec.j0 / 2}) {
        const Vec basis = sample_limit_basis(hierarchy, 0, index, refinements, scheme);
        std::ofstream os = open_out(stem + "_basis_i" + std::to_string(index) + ".txt");
        dump_solution_1d(basis, os);
        if (!os) throw std::ios_base::failure("failed writing basis dump");
      }
    }

    if (spec.dump_smoothness && dim == 2) {
      const Vec& final_z = want_mropt ? report.suboptimal.back() : direct.x;
      const SmoothnessTables tables = smoothness_probe(unflatten_rowmajor(final_z, side));
      const std::pair<const char*, const Mat*> named[] = {{"_d3x.txt", &tables.third_x},
                                                          {"_d3y.txt", &tables.third_y},
                                                          {"_d2x.txt", &tables.second_x},
                                                          {"_d2y.txt", &tables.second_y}};
      for (const auto& [suffix, table] : named) {
        std::ofstream os = open_out(stem + suffix);
        dump_solution_2d(*table, os);
        if (!os) throw std::ios_base::failure("failed writing smoothness dump");
      }
    }

    return failed ? 2 : 0;
  } catch (const std::ios_base::failure& err) {
    std::cerr << "I/O failure: " << err.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& err) {
    std::cerr << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "run failed: " << err.what() << "\n";
    return 2;
  }
}

}  // namespace mropt
