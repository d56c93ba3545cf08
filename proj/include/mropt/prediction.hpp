#pragma once

#include <vector>

#include "mropt/types.hpp"

namespace mropt {

/// Interpolatory prediction rules of odd polynomial degree n = 1, 3, 5
/// (Deslauriers-Dubuc midpoint weights on unbounded data, one-sided rows
/// near the interval ends).
///
/// A fine odd point 2i-1 sits between coarse points i-1 and i. In the
/// interior, (n+1)/2 <= i <= J-(n-1)/2, its value is
///     sum_l beta_l * (c[i-l] + c[i-1+l]),   l = 1..(n+1)/2,
/// the centered stencil of the n+1 coarse points straddling it. The
/// (n-1)/2 odd points nearest the left end use one-sided rows over coarse
/// points 0..n; the right end reflects the left rows. Even fine points copy
/// the coarse value (interpolation condition). All weights are dyadic
/// rationals, hence exact in double precision.
class PredictionScheme {
 public:
  static PredictionScheme make(int degree);

  int degree() const { return degree_; }

  /// Pair weights beta_1..beta_{(n+1)/2}.
  const std::vector<double>& interior_weights() const { return interior_; }

  /// (n-1)/2 rows of n+1 weights; row r-1 predicts fine index 2r-1 from
  /// coarse points 0..n.
  const Mat& left_boundary_rows() const { return left_rows_; }

  int pair_count() const { return (degree_ + 1) / 2; }
  int boundary_row_count() const { return (degree_ - 1) / 2; }
  /// Smallest admissible coarse cell count J for one prediction step.
  int min_coarse_cells() const { return degree_; }

 private:
  PredictionScheme(int degree, std::vector<double> interior, Mat left_rows);

  int degree_;
  std::vector<double> interior_;
  Mat left_rows_;
};

}  // namespace mropt
