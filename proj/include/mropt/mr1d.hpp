#pragma once

#include <cstddef>
#include <vector>

#include "mropt/grid.hpp"
#include "mropt/prediction.hpp"
#include "mropt/types.hpp"

namespace mropt {

/// Non-redundant multilevel representation of a finest-level vector:
/// coarse data at base_level plus one detail vector per level.
/// details[j] holds d^{base_level+j}; d^k has one entry per odd point of
/// level k+1, entry i-1 belonging to fine index 2i-1 (i = 1..J_k).
struct MultiResData {
  Vec coarse;
  std::vector<Vec> details;
  int base_level = 0;
  int top_level = 0;

  std::size_t scalar_count() const;
};

/// Downsampling at even indices; fine length J+1 with J even.
Vec decimate(const Vec& fine);

/// One refinement step: length J+1 -> 2J+1. Throws if J < scheme degree.
Vec predict_two_level(const Vec& coarse, const PredictionScheme& scheme);

/// `refinements` two-level predictions; identity for refinements == 0.
Vec predict_multilevel(const Vec& coarse, int refinements, const PredictionScheme& scheme);

struct TwoLevelSplit {
  Vec coarse;
  Vec detail;
};

/// Split fine data into its decimation and the odd-point prediction errors.
TwoLevelSplit forward_two_level(const Vec& fine, const PredictionScheme& scheme);

/// Exact inverse of forward_two_level.
Vec inverse_two_level(const Vec& coarse, const Vec& detail, const PredictionScheme& scheme);

/// Recursive two-level splits from top_level down to base_level.
MultiResData forward_full(const Vec& z, int base_level, int top_level,
                          const PredictionScheme& scheme);

/// Exact inverse of forward_full.
Vec inverse_full(const MultiResData& rep, const PredictionScheme& scheme);

/// Samples of the limit basis function of coarse node `index` at base_level,
/// i.e. the multilevel prediction of a canonical vector, after `refinements`
/// steps (refinements >= 1).
Vec sample_limit_basis(const GridHierarchy& grid, int base_level, int index,
                       int refinements, const PredictionScheme& scheme);

struct StabilityEstimate {
  double d1;
  double d2;
};

/// Empirical two-sided bounds min/max of ||P_l^k e||_inf / ||e||_inf over
/// canonical, uniform and sign vectors at every base level l and all targets
/// l < k <= grid.levels(). Deterministic for a fixed seed.
StabilityEstimate property_s_probe(const PredictionScheme& scheme, const GridHierarchy& grid,
                                   int trials, unsigned seed);

}  // namespace mropt
