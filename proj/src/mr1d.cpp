#include "mropt/mr1d.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace mropt {

namespace {

int cells_of(const Vec& v, const char* what) {
  if (v.size() < 2)
    throw std::invalid_argument(std::string(what) + ": vector needs at least 2 entries");
  return static_cast<int>(v.size()) - 1;
}

}  // namespace

std::size_t MultiResData::scalar_count() const {
  std::size_t total = static_cast<std::size_t>(coarse.size());
  for (const Vec& d : details) total += static_cast<std::size_t>(d.size());
  return total;
}

Vec decimate(const Vec& fine) {
  const int jf = cells_of(fine, "decimate");
  if (jf % 2 != 0) throw std::invalid_argument("decimate: fine cell count must be even");
  const int jc = jf / 2;
  Vec coarse(jc + 1);
  for (int i = 0; i <= jc; ++i) coarse[i] = fine[2 * i];
  return coarse;
}

Vec predict_two_level(const Vec& coarse, const PredictionScheme& scheme) {
  const int jc = cells_of(coarse, "predict_two_level");
  const int n = scheme.degree();
  if (jc < n)
    throw std::invalid_argument("predict_two_level: coarse grid with " + std::to_string(jc) +
                                " cells cannot support degree " + std::to_string(n));
  const int jf = 2 * jc;
  Vec fine(jf + 1);

  // Interpolation condition: even points copy the coarse value.
  for (int i = 0; i <= jc; ++i) fine[2 * i] = coarse[i];

  const auto& beta = scheme.interior_weights();
  const int pairs = scheme.pair_count();
  const int rows = scheme.boundary_row_count();

  for (int i = pairs; i <= jc - rows; ++i) {
    double v = 0.0;
    for (int l = 1; l <= pairs; ++l) v += beta[l - 1] * (coarse[i - l] + coarse[i - 1 + l]);
    fine[2 * i - 1] = v;
  }

  const Mat& left = scheme.left_boundary_rows();
  for (int r = 1; r <= rows; ++r) {
    double lv = 0.0, rv = 0.0;
    for (int j = 0; j <= n; ++j) {
      lv += left(r - 1, j) * coarse[j];
      rv += left(r - 1, j) * coarse[jc - j];
    }
    fine[2 * r - 1] = lv;
    fine[jf - (2 * r - 1)] = rv;
  }
  return fine;
}

Vec predict_multilevel(const Vec& coarse, int refinements, const PredictionScheme& scheme) {
  if (refinements < 0) throw std::invalid_argument("predict_multilevel: refinements must be >= 0");
  Vec v = coarse;
  for (int r = 0; r < refinements; ++r) v = predict_two_level(v, scheme);
  return v;
}

TwoLevelSplit forward_two_level(const Vec& fine, const PredictionScheme& scheme) {
  TwoLevelSplit split;
  split.coarse = decimate(fine);
  const Vec predicted = predict_two_level(split.coarse, scheme);
  const int jc = static_cast<int>(split.coarse.size()) - 1;
  split.detail.resize(jc);
  for (int i = 1; i <= jc; ++i) split.detail[i - 1] = fine[2 * i - 1] - predicted[2 * i - 1];
  return split;
}

Vec inverse_two_level(const Vec& coarse, const Vec& detail, const PredictionScheme& scheme) {
  const int jc = cells_of(coarse, "inverse_two_level");
  if (detail.size() != jc)
    throw std::invalid_argument("inverse_two_level: detail length must equal coarse cell count");
  Vec fine = predict_two_level(coarse, scheme);
  for (int i = 1; i <= jc; ++i) fine[2 * i - 1] += detail[i - 1];
  return fine;
}

MultiResData forward_full(const Vec& z, int base_level, int top_level,
                          const PredictionScheme& scheme) {
  if (base_level < 0 || base_level > top_level)
    throw std::invalid_argument("forward_full: need 0 <= base_level <= top_level");
  MultiResData rep;
  rep.base_level = base_level;
  rep.top_level = top_level;
  rep.coarse = z;
  rep.details.resize(top_level - base_level);
  for (int k = top_level; k > base_level; --k) {
    TwoLevelSplit split = forward_two_level(rep.coarse, scheme);
    rep.coarse = std::move(split.coarse);
    rep.details[k - 1 - base_level] = std::move(split.detail);
  }
  return rep;
}

Vec inverse_full(const MultiResData& rep, const PredictionScheme& scheme) {
  Vec v = rep.coarse;
  for (const Vec& d : rep.details) v = inverse_two_level(v, d, scheme);
  return v;
}

Vec sample_limit_basis(const GridHierarchy& grid, int base_level, int index, int refinements,
                       const PredictionScheme& scheme) {
  if (refinements < 1)
    throw std::invalid_argument("sample_limit_basis: refinements must be >= 1");
  const int points = grid.points(base_level);
  if (index < 0 || index >= points)
    throw std::invalid_argument("sample_limit_basis: index out of range");
  Vec delta = Vec::Zero(points);
  delta[index] = 1.0;
  return predict_multilevel(delta, refinements, scheme);
}

StabilityEstimate property_s_probe(const PredictionScheme& scheme, const GridHierarchy& grid,
                                   int trials, unsigned seed) {
  if (trials < 1) throw std::invalid_argument("property_s_probe: trials must be >= 1");
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;

  for (int base = 0; base < grid.levels(); ++base) {
    const int points = grid.points(base);
    std::vector<Vec> probes;
    probes.reserve(points + trials);
    for (int i = 0; i < points; ++i) {
      Vec e = Vec::Zero(points);
      e[i] = 1.0;
      probes.push_back(std::move(e));
    }
    // Per-level generator so estimates at a base level do not depend on how
    // many levels sit above it.
    std::mt19937 rng(seed + 0x9e3779b9u * static_cast<unsigned>(base + 1));
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    for (int t = 0; t < trials; ++t) {
      Vec e(points);
      if (t % 2 == 0) {
        for (int i = 0; i < points; ++i) e[i] = uniform(rng);
      } else {
        for (int i = 0; i < points; ++i) e[i] = uniform(rng) < 0.0 ? -1.0 : 1.0;
      }
      probes.push_back(std::move(e));
    }

    for (const Vec& e : probes) {
      const double base_norm = e.lpNorm<Eigen::Infinity>();
      if (base_norm == 0.0) continue;
      Vec v = e;
      for (int k = base + 1; k <= grid.levels(); ++k) {
        v = predict_two_level(v, scheme);
        const double ratio = v.lpNorm<Eigen::Infinity>() / base_norm;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
    }
  }
  return {lo, hi};
}

}  // namespace mropt
