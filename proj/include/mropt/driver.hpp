#pragma once

#include <cstdint>
#include <vector>

#include "mropt/grid.hpp"
#include "mropt/objective.hpp"
#include "mropt/optimizers.hpp"
#include "mropt/prediction.hpp"
#include "mropt/types.hpp"

namespace mropt {

enum class OptimizerKind { quasi_newton, pattern_search };

struct MrOptConfig {
  PredictionScheme scheme;
  GridHierarchy hierarchy;
  /// Stop climbing the ladder once ||z_next - z||_inf <= tol_m.
  double tol_m = 1e-6;
  /// Pinned finest-level flat indices; the perturbation is forced to zero
  /// there and at every coarse node whose image is pinned.
  std::vector<int> boundary_mask;
  OptimizerKind optimizer = OptimizerKind::quasi_newton;
  OptimizerConfig opt;
  /// Solve quadratic auxiliary problems through the reduced form instead of
  /// forwarding each evaluation to F. Requires an exposed quadratic form.
  bool quadratic_fast_path = false;
  /// Above this coarse dimension the reduced form is not materialized and
  /// the black-box route is used.
  int fast_path_max_dim = 20000;
  /// Solve quadratic auxiliary problems exactly by a direct sparse solve.
  /// Evaluation counts are reported as zero and flagged.
  bool oracle_mode = false;
};

struct LevelRecord {
  int level = 0;
  int dof = 0;  ///< optimizer-visible degrees of freedom (pinned excluded)
  std::int64_t evals = 0;
  double step_inf_norm = 0.0;
  double f_value = 0.0;
  double eps_inf_norm = 0.0;
  OptStatus status = OptStatus::converged;
};

struct MrOptReport {
  std::vector<LevelRecord> levels;
  /// z^{L,0} .. z^{L,K+1}; one more entry than executed levels.
  std::vector<Vec> suboptimal;
  std::int64_t total_evals = 0;
  bool stopped_early = false;
  bool oracle_counts = false;
  /// decay_rates[k] = log2(step_{k-1}/step_k); NaN where undefined.
  std::vector<double> decay_rates;
};

/// The k-th level objective e -> F(z_current + P_k^L embed(e)) over the
/// unpinned coarse entries; every call forwards exactly one call to F.
CountedObjective build_auxiliary_objective(const CountedObjective& objective,
                                           const Vec& z_current, int level,
                                           const MrOptConfig& config);

struct ReducedQuadratic {
  SpMat A;
  Vec b;
  double c = 0.0;
};

/// Reduced form of a quadratic objective at a level: A_k = P'AP,
/// b_k = P'(b - A z_current), c_k = F(z_current), with P the prediction of
/// zero-padded coarse perturbations. Throws if A_k is not positive definite
/// on the unpinned subspace.
ReducedQuadratic reduce_quadratic(const QuadraticForm& form, const Vec& z_current, int level,
                                  const MrOptConfig& config);

/// The coarse-to-fine ladder: for k = 0..L build the auxiliary objective
/// around the current sub-optimal solution, minimize it from zero, move by
/// the predicted perturbation, and stop early once the step falls at or
/// below tol_m.
MrOptReport run_mropt(const CountedObjective& objective, const Vec& z0,
                      const MrOptConfig& config);

struct DirectResult {
  Vec x;
  double f = 0.0;
  std::int64_t evals = 0;
  OptStatus status = OptStatus::converged;
};

/// Baseline: one optimizer call at the finest level (pinned entries fixed).
DirectResult run_direct(const CountedObjective& objective, const Vec& z0,
                        const MrOptConfig& config);

/// log2 ratios of successive step norms; NaN entries flag undefined rates
/// (first level, zero step norms).
std::vector<double> estimate_decay_rates(const MrOptReport& report);

}  // namespace mropt
