#include "mropt/mr2d.hpp"

#include <stdexcept>
#include <utility>

#include "mropt/mr1d.hpp"

namespace mropt {

namespace {

int side_cells(const Mat& m, const char* what) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(what) + ": grid must be square");
  if (m.rows() < 2) throw std::invalid_argument(std::string(what) + ": grid too small");
  return static_cast<int>(m.rows()) - 1;
}

}  // namespace

std::size_t MultiResData2::scalar_count() const {
  std::size_t total = static_cast<std::size_t>(coarse.size());
  for (const DetailBlocks2& d : details)
    total += static_cast<std::size_t>(d.odd_x.size() + d.odd_y.size() + d.odd_xy.size());
  return total;
}

Mat predict_two_level_2d(const Mat& coarse, const PredictionScheme& scheme) {
  const int jc = side_cells(coarse, "predict_two_level_2d");
  const int jf = 2 * jc;
  // Along y (columns) first, then along x (rows): the reverse of the forward
  // transform's row-then-column order, so predicted data has bitwise-zero
  // details under the forward transform.
  Mat halfway(jf + 1, jc + 1);
  for (int ix = 0; ix <= jc; ++ix)
    halfway.col(ix) = predict_two_level(coarse.col(ix), scheme);
  Mat fine(jf + 1, jf + 1);
  for (int iy = 0; iy <= jf; ++iy)
    fine.row(iy) = predict_two_level(halfway.row(iy).transpose(), scheme).transpose();
  return fine;
}

Mat predict_multilevel_2d(const Mat& coarse, int refinements, const PredictionScheme& scheme) {
  if (refinements < 0)
    throw std::invalid_argument("predict_multilevel_2d: refinements must be >= 0");
  Mat v = coarse;
  for (int r = 0; r < refinements; ++r) v = predict_two_level_2d(v, scheme);
  return v;
}

TwoLevelSplit2 forward_two_level_2d(const Mat& fine, const PredictionScheme& scheme) {
  const int jf = side_cells(fine, "forward_two_level_2d");
  if (jf % 2 != 0)
    throw std::invalid_argument("forward_two_level_2d: fine cell count must be even");
  const int jc = jf / 2;

  // 1D transform of every row: coarse columns and x-detail columns.
  Mat row_coarse(jf + 1, jc + 1);
  Mat row_detail(jf + 1, jc);
  for (int iy = 0; iy <= jf; ++iy) {
    TwoLevelSplit s = forward_two_level(fine.row(iy).transpose(), scheme);
    row_coarse.row(iy) = s.coarse.transpose();
    row_detail.row(iy) = s.detail.transpose();
  }

  TwoLevelSplit2 out;
  out.coarse.resize(jc + 1, jc + 1);
  out.details.odd_y.resize(jc, jc + 1);
  for (int ix = 0; ix <= jc; ++ix) {
    TwoLevelSplit s = forward_two_level(row_coarse.col(ix), scheme);
    out.coarse.col(ix) = s.coarse;
    out.details.odd_y.col(ix) = s.detail;
  }
  out.details.odd_x.resize(jc + 1, jc);
  out.details.odd_xy.resize(jc, jc);
  for (int j = 0; j < jc; ++j) {
    TwoLevelSplit s = forward_two_level(row_detail.col(j), scheme);
    out.details.odd_x.col(j) = s.coarse;
    out.details.odd_xy.col(j) = s.detail;
  }
  return out;
}

Mat inverse_two_level_2d(const Mat& coarse, const DetailBlocks2& details,
                         const PredictionScheme& scheme) {
  const int jc = side_cells(coarse, "inverse_two_level_2d");
  const int jf = 2 * jc;
  if (details.odd_x.rows() != jc + 1 || details.odd_x.cols() != jc ||
      details.odd_y.rows() != jc || details.odd_y.cols() != jc + 1 ||
      details.odd_xy.rows() != jc || details.odd_xy.cols() != jc)
    throw std::invalid_argument("inverse_two_level_2d: detail block shape mismatch");

  // Invert along y for both column groups, then along x for every row.
  Mat row_coarse(jf + 1, jc + 1);
  for (int ix = 0; ix <= jc; ++ix)
    row_coarse.col(ix) = inverse_two_level(coarse.col(ix), details.odd_y.col(ix), scheme);
  Mat row_detail(jf + 1, jc);
  for (int j = 0; j < jc; ++j)
    row_detail.col(j) = inverse_two_level(details.odd_x.col(j), details.odd_xy.col(j), scheme);

  Mat fine(jf + 1, jf + 1);
  for (int iy = 0; iy <= jf; ++iy)
    fine.row(iy) =
        inverse_two_level(row_coarse.row(iy).transpose(), row_detail.row(iy).transpose(), scheme)
            .transpose();
  return fine;
}

MultiResData2 forward_full_2d(const Mat& z, int base_level, int top_level,
                              const PredictionScheme& scheme) {
  if (base_level < 0 || base_level > top_level)
    throw std::invalid_argument("forward_full_2d: need 0 <= base_level <= top_level");
  MultiResData2 rep;
  rep.base_level = base_level;
  rep.top_level = top_level;
  rep.coarse = z;
  rep.details.resize(top_level - base_level);
  for (int k = top_level; k > base_level; --k) {
    TwoLevelSplit2 split = forward_two_level_2d(rep.coarse, scheme);
    rep.coarse = std::move(split.coarse);
    rep.details[k - 1 - base_level] = std::move(split.details);
  }
  return rep;
}

Mat inverse_full_2d(const MultiResData2& rep, const PredictionScheme& scheme) {
  Mat v = rep.coarse;
  for (const DetailBlocks2& d : rep.details) v = inverse_two_level_2d(v, d, scheme);
  return v;
}

double detail_inf_norm(const DetailBlocks2& details) {
  double norm = 0.0;
  if (details.odd_x.size() > 0)
    norm = std::max(norm, details.odd_x.cwiseAbs().maxCoeff());
  if (details.odd_y.size() > 0)
    norm = std::max(norm, details.odd_y.cwiseAbs().maxCoeff());
  if (details.odd_xy.size() > 0)
    norm = std::max(norm, details.odd_xy.cwiseAbs().maxCoeff());
  return norm;
}

Vec flatten_rowmajor(const Mat& grid) {
  Vec flat(grid.size());
  const int rows = static_cast<int>(grid.rows());
  const int cols = static_cast<int>(grid.cols());
  for (int iy = 0; iy < rows; ++iy)
    for (int ix = 0; ix < cols; ++ix) flat[iy * cols + ix] = grid(iy, ix);
  return flat;
}

Mat unflatten_rowmajor(const Vec& flat, int side) {
  if (flat.size() != static_cast<Eigen::Index>(side) * side)
    throw std::invalid_argument("unflatten_rowmajor: length does not match side*side");
  Mat grid(side, side);
  for (int iy = 0; iy < side; ++iy)
    for (int ix = 0; ix < side; ++ix) grid(iy, ix) = flat[iy * side + ix];
  return grid;
}

}  // namespace mropt
