#pragma once

#include <stdexcept>

namespace mropt {

/// Ladder of nested dyadic grids on [0,1] (dim 1) or [0,1]^2 (dim 2).
/// Level k has j0*2^k cells per dimension, hence j0*2^k + 1 points, with
/// spacing h_k = 1/(j0*2^k). Level 0 is the coarsest, level levels() the
/// finest.
class GridHierarchy {
 public:
  GridHierarchy(int j0, int levels, int dim = 1) : j0_(j0), levels_(levels), dim_(dim) {
    if (j0 < 1) throw std::invalid_argument("GridHierarchy: j0 must be >= 1");
    if (levels < 0) throw std::invalid_argument("GridHierarchy: levels must be >= 0");
    if (dim != 1 && dim != 2) throw std::invalid_argument("GridHierarchy: dim must be 1 or 2");
  }

  int j0() const { return j0_; }
  int levels() const { return levels_; }
  int dim() const { return dim_; }

  int cells(int level) const { check_level(level); return j0_ << level; }
  /// Points per dimension at a level.
  int points(int level) const { return cells(level) + 1; }
  /// Total point count of the level-k grid (dim-aware).
  int total_points(int level) const {
    const int p = points(level);
    return dim_ == 1 ? p : p * p;
  }
  double spacing(int level) const { return 1.0 / cells(level); }

 private:
  void check_level(int level) const {
    if (level < 0 || level > levels_)
      throw std::invalid_argument("GridHierarchy: level out of range");
  }

  int j0_;
  int levels_;
  int dim_;
};

}  // namespace mropt
