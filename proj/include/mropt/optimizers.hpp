#pragma once

#include <cstdint>
#include <string>

#include "mropt/objective.hpp"
#include "mropt/types.hpp"

namespace mropt {

struct OptimizerConfig {
  /// Stop when the max norm of the difference between two consecutive
  /// accepted iterates falls at or below this.
  double tol_x = 1e-6;
  /// 0 means unlimited.
  std::int64_t max_evals = 0;
  /// Central-difference step is fd_step * max(1, |x_i|) per coordinate.
  double fd_step = 1e-6;
  double initial_pattern_step = 1.0;
  unsigned seed = 0;
};

enum class OptStatus { converged, max_evals, line_search_failed, non_finite };

std::string to_string(OptStatus status);

struct OptResult {
  Vec x;
  double f = 0.0;
  std::int64_t evals = 0;
  OptStatus status = OptStatus::converged;
  int iterations = 0;
};

/// BFGS with backtracking Armijo line search and central finite-difference
/// gradients. Every accepted iterate decreases F.
OptResult minimize_quasi_newton(const CountedObjective& objective, const Vec& x0,
                                const OptimizerConfig& config);

/// Coordinate pattern search: polls x +- step*e_i for all coordinates, moves
/// to the best strictly improving point, halves the step on a full
/// unsuccessful poll, stops once step <= tol_x. Non-finite values are
/// treated as +inf.
OptResult minimize_pattern_search(const CountedObjective& objective, const Vec& x0,
                                  const OptimizerConfig& config);

/// Cholesky solve of Ax = b for symmetric positive definite A; throws on
/// asymmetry or indefiniteness. No objective evaluations involved.
Vec solve_quadratic_direct(const SpMat& A, const Vec& b);
Vec solve_quadratic_direct(const Mat& A, const Vec& b);

}  // namespace mropt
