#pragma once

#include <cstddef>
#include <vector>

#include "mropt/prediction.hpp"
#include "mropt/types.hpp"

namespace mropt {

// Square point-value grids on [0,1]^2, row index = y node, column = x node.
// The tensor-product transform applies the 1D transform along x (rows),
// then along y (columns); detail blocks are keyed by index parity.

/// Detail blocks of one 2D refinement step. Odd x/y indices are the
/// midpoints created by the step; Jc is the coarse cell count.
struct DetailBlocks2 {
  Mat odd_x;   ///< (Jc+1) x Jc, odd x / even y
  Mat odd_y;   ///< Jc x (Jc+1), even x / odd y
  Mat odd_xy;  ///< Jc x Jc, odd x / odd y
};

struct TwoLevelSplit2 {
  Mat coarse;
  DetailBlocks2 details;
};

struct MultiResData2 {
  Mat coarse;
  std::vector<DetailBlocks2> details;  ///< details[j] belongs to base_level + j
  int base_level = 0;
  int top_level = 0;

  std::size_t scalar_count() const;
};

Mat predict_two_level_2d(const Mat& coarse, const PredictionScheme& scheme);
Mat predict_multilevel_2d(const Mat& coarse, int refinements, const PredictionScheme& scheme);

TwoLevelSplit2 forward_two_level_2d(const Mat& fine, const PredictionScheme& scheme);
Mat inverse_two_level_2d(const Mat& coarse, const DetailBlocks2& details,
                         const PredictionScheme& scheme);

MultiResData2 forward_full_2d(const Mat& z, int base_level, int top_level,
                              const PredictionScheme& scheme);
Mat inverse_full_2d(const MultiResData2& rep, const PredictionScheme& scheme);

/// Largest absolute entry across the three blocks.
double detail_inf_norm(const DetailBlocks2& details);

// Row-major flattening, the one convention used wherever grids meet flat
// vectors: entry iy*(side) + ix.
Vec flatten_rowmajor(const Mat& grid);
Mat unflatten_rowmajor(const Vec& flat, int side);

}  // namespace mropt
