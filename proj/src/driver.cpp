#include "mropt/driver.hpp"

#include <Eigen/SparseCholesky>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mropt/mr1d.hpp"
#include "mropt/mr2d.hpp"

namespace mropt {

namespace {

void validate_config(const MrOptConfig& config) {
  if (config.tol_m <= 0.0) throw std::invalid_argument("MrOptConfig: tol_m must be > 0");
  if (config.hierarchy.j0() < config.scheme.degree())
    throw std::invalid_argument("MrOptConfig: hierarchy j0 must be >= prediction degree");
}

// Per-level view of the pinned mask: which flat indices of the level-k grid
// are optimizer degrees of freedom, and how a free vector is predicted to
// the finest level. A coarse index is pinned iff its image node is pinned.
struct LevelContext {
  PredictionScheme scheme;
  GridHierarchy hierarchy;
  int level;
  std::vector<int> free_idx;

  static LevelContext make(const MrOptConfig& config, int level) {
    const GridHierarchy& g = config.hierarchy;
    if (level < 0 || level > g.levels())
      throw std::invalid_argument("MR/OPT: level out of range");
    const int shift = g.levels() - level;
    std::unordered_set<int> pinned_fine(config.boundary_mask.begin(),
                                        config.boundary_mask.end());
    LevelContext ctx{config.scheme, g, level, {}};
    if (g.dim() == 1) {
      const int points = g.points(level);
      ctx.free_idx.reserve(points);
      for (int i = 0; i < points; ++i)
        if (!pinned_fine.count(i << shift)) ctx.free_idx.push_back(i);
    } else {
      const int side = g.points(level);
      const int side_fine = g.points(g.levels());
      ctx.free_idx.reserve(side * side);
      for (int iy = 0; iy < side; ++iy)
        for (int ix = 0; ix < side; ++ix)
          if (!pinned_fine.count((iy << shift) * side_fine + (ix << shift)))
            ctx.free_idx.push_back(iy * side + ix);
    }
    return ctx;
  }

  int dof() const { return static_cast<int>(free_idx.size()); }

  Vec embed(const Vec& eps) const {
    if (eps.size() != dof())
      throw std::invalid_argument("MR/OPT: perturbation dimension mismatch");
    Vec full = Vec::Zero(hierarchy.total_points(level));
    for (int j = 0; j < dof(); ++j) full[free_idx[j]] = eps[j];
    return full;
  }

  // P_k^L applied to the zero-padded perturbation, as a finest-level vector.
  Vec prolong(const Vec& eps) const {
    const int refinements = hierarchy.levels() - level;
    Vec full = embed(eps);
    if (hierarchy.dim() == 1) return predict_multilevel(full, refinements, scheme);
    const Mat grid = unflatten_rowmajor(full, hierarchy.points(level));
    return flatten_rowmajor(predict_multilevel_2d(grid, refinements, scheme));
  }
};

SpMat prediction_matrix(const LevelContext& ctx) {
  const int n_free = ctx.dof();
  const int n_fine = ctx.hierarchy.total_points(ctx.hierarchy.levels());
  std::vector<Eigen::Triplet<double>> trips;
  Vec unit = Vec::Zero(n_free);
  for (int j = 0; j < n_free; ++j) {
    unit[j] = 1.0;
    const Vec column = ctx.prolong(unit);
    unit[j] = 0.0;
    for (int i = 0; i < n_fine; ++i)
      if (column[i] != 0.0) trips.emplace_back(i, j, column[i]);
  }
  SpMat P(n_fine, n_free);
  P.setFromTriplets(trips.begin(), trips.end());
  P.makeCompressed();
  return P;
}

ReducedQuadratic reduce_with_context(const QuadraticForm& form, const Vec& z_current,
                                     const LevelContext& ctx) {
  const SpMat P = prediction_matrix(ctx);
  ReducedQuadratic red;
  red.A = SpMat(P.transpose() * SpMat(form.A * P));
  red.A.makeCompressed();
  red.b = P.transpose() * (form.b - form.A * z_current);
  red.c = form.value(z_current);

  Eigen::SimplicialLDLT<SpMat> ldlt(red.A);
  if (ldlt.info() != Eigen::Success || ldlt.vectorD().minCoeff() <= 0.0)
    throw std::runtime_error(
        "reduce_quadratic: reduced matrix is not positive definite on the unpinned subspace");
  return red;
}

CountedObjective make_black_box_aux(const CountedObjective& objective, const Vec& z_current,
                                    std::shared_ptr<const LevelContext> ctx) {
  return CountedObjective([objective, z_current, ctx](const Vec& eps) {
    return objective(z_current + ctx->prolong(eps));
  });
}

CountedObjective make_fast_path_aux(const QuadraticForm& form, const Vec& z_current,
                                    const LevelContext& ctx) {
  ReducedQuadratic red = reduce_with_context(form, z_current, ctx);
  auto shared = std::make_shared<const QuadraticForm>(
      QuadraticForm{std::move(red.A), std::move(red.b), red.c});
  return CountedObjective([shared](const Vec& eps) { return shared->value(eps); }, *shared);
}

OptResult run_optimizer(const MrOptConfig& config, const CountedObjective& objective,
                        const Vec& x0) {
  switch (config.optimizer) {
    case OptimizerKind::pattern_search:
      return minimize_pattern_search(objective, x0, config.opt);
    case OptimizerKind::quasi_newton:
    default:
      return minimize_quasi_newton(objective, x0, config.opt);
  }
}

}  // namespace

CountedObjective build_auxiliary_objective(const CountedObjective& objective,
                                           const Vec& z_current, int level,
                                           const MrOptConfig& config) {
  validate_config(config);
  if (z_current.size() != config.hierarchy.total_points(config.hierarchy.levels()))
    throw std::invalid_argument("build_auxiliary_objective: z_current has wrong length");
  auto ctx = std::make_shared<const LevelContext>(LevelContext::make(config, level));
  return make_black_box_aux(objective, z_current, std::move(ctx));
}

ReducedQuadratic reduce_quadratic(const QuadraticForm& form, const Vec& z_current, int level,
                                  const MrOptConfig& config) {
  validate_config(config);
  if (z_current.size() != config.hierarchy.total_points(config.hierarchy.levels()))
    throw std::invalid_argument("reduce_quadratic: z_current has wrong length");
  return reduce_with_context(form, z_current, LevelContext::make(config, level));
}

MrOptReport run_mropt(const CountedObjective& objective, const Vec& z0,
                      const MrOptConfig& config) {
  validate_config(config);
  const int top = config.hierarchy.levels();
  if (z0.size() != config.hierarchy.total_points(top))
    throw std::invalid_argument("run_mropt: z0 has wrong length");
  if (config.oracle_mode && objective.quadratic_form() == nullptr)
    throw std::invalid_argument("run_mropt: oracle mode requires an exposed quadratic form");

  MrOptReport report;
  report.oracle_counts = config.oracle_mode;
  report.suboptimal.push_back(z0);
  Vec z = z0;

  for (int k = 0; k <= top; ++k) {
    const LevelContext ctx = LevelContext::make(config, k);
    LevelRecord rec;
    rec.level = k;
    rec.dof = ctx.dof();

    Vec eps = Vec::Zero(ctx.dof());
    if (config.oracle_mode) {
      const ReducedQuadratic red = reduce_with_context(*objective.quadratic_form(), z, ctx);
      eps = solve_quadratic_direct(red.A, red.b);
      rec.f_value = 0.5 * eps.dot(red.A * eps) - red.b.dot(eps) + red.c;
      rec.evals = 0;
      rec.status = OptStatus::converged;
    } else {
      const QuadraticForm* form = objective.quadratic_form();
      const bool fast = config.quadratic_fast_path && form != nullptr &&
                        ctx.dof() <= config.fast_path_max_dim;
      CountedObjective aux =
          fast ? make_fast_path_aux(*form, z, ctx)
               : make_black_box_aux(objective, z,
                                    std::make_shared<const LevelContext>(ctx));
      const OptResult res = run_optimizer(config, aux, eps);
      eps = res.x;
      rec.f_value = res.f;
      rec.evals = res.evals;
      rec.status = res.status;
    }

    rec.eps_inf_norm = ctx.dof() > 0 ? eps.lpNorm<Eigen::Infinity>() : 0.0;
    const Vec z_next = z + ctx.prolong(eps);
    rec.step_inf_norm = (z_next - z).lpNorm<Eigen::Infinity>();
    report.levels.push_back(rec);
    report.suboptimal.push_back(z_next);
    report.total_evals += rec.evals;
    z = z_next;

    if (rec.step_inf_norm <= config.tol_m) {
      report.stopped_early = k < top;
      break;
    }
  }

  report.decay_rates = estimate_decay_rates(report);
  return report;
}

DirectResult run_direct(const CountedObjective& objective, const Vec& z0,
                        const MrOptConfig& config) {
  validate_config(config);
  const int top = config.hierarchy.levels();
  if (z0.size() != config.hierarchy.total_points(top))
    throw std::invalid_argument("run_direct: z0 has wrong length");
  const LevelContext ctx = LevelContext::make(config, top);

  DirectResult out;
  if (config.oracle_mode) {
    const QuadraticForm* form = objective.quadratic_form();
    if (form == nullptr)
      throw std::invalid_argument("run_direct: oracle mode requires an exposed quadratic form");
    const ReducedQuadratic red = reduce_with_context(*form, z0, ctx);
    const Vec eps = solve_quadratic_direct(red.A, red.b);
    out.x = z0 + ctx.prolong(eps);
    out.f = 0.5 * eps.dot(red.A * eps) - red.b.dot(eps) + red.c;
    out.evals = 0;
    out.status = OptStatus::converged;
    return out;
  }

  CountedObjective on_free =
      make_black_box_aux(objective, z0, std::make_shared<const LevelContext>(ctx));
  const OptResult res = run_optimizer(config, on_free, Vec::Zero(ctx.dof()));
  out.x = z0 + ctx.prolong(res.x);
  out.f = res.f;
  out.evals = res.evals;
  out.status = res.status;
  return out;
}

std::vector<double> estimate_decay_rates(const MrOptReport& report) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> rates(report.levels.size(), nan);
  for (std::size_t k = 1; k < report.levels.size(); ++k) {
    const double prev = report.levels[k - 1].step_inf_norm;
    const double cur = report.levels[k].step_inf_norm;
    if (prev > 0.0 && cur > 0.0) rates[k] = std::log2(prev / cur);
  }
  return rates;
}

}  // namespace mropt
