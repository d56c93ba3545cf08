#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mropt/grid.hpp"
#include "mropt/objective.hpp"
#include "mropt/types.hpp"

namespace mropt {

/// A benchmark objective over finest-level full-grid vectors (boundary
/// entries included; pinned entries are read from the vector and must be
/// kept at their initial values by the caller). For 2D problems vectors are
/// the row-major flattening of (J+1) x (J+1) grids.
struct ProblemInstance {
  std::string name;
  GridHierarchy hierarchy;
  CountedObjective objective;
  Vec initial_guess;
  std::vector<int> boundary_mask;  ///< pinned finest-level flat indices, sorted
  std::optional<Vec> reference_solution;
};

/// -u'' + 2u = f on (0,1), u(0)=u(1)=0, f(t) = 1e6 t(1-t)(t-1/2)(t-1/4)(3/4-t),
/// discretized with the centered second difference. Quadratic form exposed;
/// the reference solution comes from a direct sparse solve.
ProblemInstance make_bvp1d(const GridHierarchy& hierarchy);

/// -(u_xx + u_yy) = f on the unit square, zero boundary,
/// f(x,y) = sin(4 pi x(1-x) y(1-y)), 5-point Laplacian. Quadratic form
/// exposed; reference from a direct sparse solve.
ProblemInstance make_poisson2d(const GridHierarchy& hierarchy);

/// Discrete minimal surface area with boundary x(1-x) on the y=0,1 edges and
/// 0 elsewhere. Convex, non-quadratic; no reference.
ProblemInstance make_mins(const GridHierarchy& hierarchy);

/// Nonlinear least-squares form of -(u_xx+u_yy) + 0.5 (u+x+y+1)^3 = 0 with
/// zero boundary. Non-convex; no reference.
ProblemInstance make_morebv(const GridHierarchy& hierarchy);

/// Problem selection by name: bvp1d, poisson2d, mins, morebv.
ProblemInstance make_problem(const std::string& name, const GridHierarchy& hierarchy);

/// Quasi-Newton minimization at the finest level down to `tol`, for problems
/// without a closed-form reference. Labeled numerical, never exact.
Vec compute_numerical_reference(const ProblemInstance& problem, double tol = 1e-10);

/// Centered finite-difference tables scaled by h^-3 / h^-2, zero where the
/// stencil leaves the grid.
struct SmoothnessTables {
  Mat third_x;
  Mat third_y;
  Mat second_x;
  Mat second_y;
};

SmoothnessTables smoothness_probe(const Mat& z);

}  // namespace mropt
