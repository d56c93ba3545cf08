#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mropt/mr1d.hpp"

using namespace mropt;

namespace {

Vec random_vec(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = dist(rng);
  return v;
}

// Test-side polynomial oracle: p(t) = sum_j coeff[j] t^j evaluated on the
// level grid with J cells.
Vec poly_samples(const std::vector<double>& coeff, int J) {
  Vec v(J + 1);
  for (int i = 0; i <= J; ++i) {
    const double t = static_cast<double>(i) / J;
    double acc = 0.0;
    for (std::size_t j = coeff.size(); j-- > 0;) acc = acc * t + coeff[j];
    v[i] = acc;
  }
  return v;
}

double inf_norm(const Vec& v) { return v.lpNorm<Eigen::Infinity>(); }

}  // namespace

TEST_CASE("decimate extracts even indices") {
  Vec fine(9);
  for (int i = 0; i < 9; ++i) fine[i] = i;
  const Vec coarse = decimate(fine);
  REQUIRE(coarse.size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(coarse[i] == 2.0 * i);
}

TEST_CASE("decimate preserves constants") {
  const Vec fine = Vec::Constant(9, 3.25);
  const Vec coarse = decimate(fine);
  for (int i = 0; i < coarse.size(); ++i) CHECK(coarse[i] == 3.25);
}

TEST_CASE("decimate of x^2 samples equals coarse-grid samples") {
  const Vec fine = poly_samples({0.0, 0.0, 1.0}, 8);
  const Vec expected = poly_samples({0.0, 0.0, 1.0}, 4);
  const Vec coarse = decimate(fine);
  CHECK(inf_norm(coarse - expected) == 0.0);
}

TEST_CASE("decimate rejects odd cell counts") {
  CHECK_THROWS_AS(decimate(Vec::Zero(4)), std::invalid_argument);
}

TEST_CASE("n=3 midpoint on linear data") {
  Vec coarse(4);
  coarse << 0, 1, 2, 3;
  const Vec fine = predict_two_level(coarse, PredictionScheme::make(3));
  CHECK(fine[3] == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("n=3 interior midpoint reproduces x^3") {
  Vec coarse(4);
  coarse << 0, 1, 8, 27;  // t^3 at t = 0,1,2,3
  const Vec fine = predict_two_level(coarse, PredictionScheme::make(3));
  CHECK(fine[3] == doctest::Approx(std::pow(1.5, 3)).epsilon(1e-14));
  CHECK(fine[3] == doctest::Approx(54.0 / 16.0).epsilon(1e-15));
}

TEST_CASE("n=3 left boundary row reproduces x^3") {
  Vec coarse(4);
  coarse << 0, 1, 8, 27;
  const Vec fine = predict_two_level(coarse, PredictionScheme::make(3));
  CHECK(fine[1] == doctest::Approx(std::pow(0.5, 3)).epsilon(1e-13));
  CHECK(fine[1] == doctest::Approx(0.125).epsilon(1e-13));
}

TEST_CASE("prediction rejects too-small coarse grids") {
  CHECK_THROWS_AS(predict_two_level(Vec::Zero(3), PredictionScheme::make(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(predict_two_level(Vec::Zero(5), PredictionScheme::make(5)),
                  std::invalid_argument);
}

TEST_CASE("scheme weights reproduce constants") {
  for (int n : {1, 3, 5}) {
    const PredictionScheme s = PredictionScheme::make(n);
    double pair_sum = 0.0;
    for (double b : s.interior_weights()) pair_sum += b;
    CHECK(2.0 * pair_sum == 1.0);
    for (int r = 0; r < s.boundary_row_count(); ++r)
      CHECK(s.left_boundary_rows().row(r).sum() == doctest::Approx(1.0).epsilon(1e-16));
  }
}

TEST_CASE("polynomial reproduction of degree <= n, including boundaries") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int n : {1, 3, 5}) {
    const PredictionScheme s = PredictionScheme::make(n);
    std::vector<double> coeff(n + 1);
    for (double& c : coeff) c = dist(rng);
    const int jc = 8;
    const Vec coarse = poly_samples(coeff, jc);
    const Vec fine = poly_samples(coeff, 2 * jc);
    const Vec predicted = predict_two_level(coarse, s);
    CHECK(inf_norm(predicted - fine) <= 1e-12 * (1.0 + inf_norm(fine)));

    const TwoLevelSplit split = forward_two_level(fine, s);
    CHECK(inf_norm(split.detail) <= 1e-10 * (1.0 + inf_norm(fine)));
  }
}

TEST_CASE("predict_multilevel is the identity at zero refinements") {
  const Vec v = random_vec(9, 3);
  const Vec w = predict_multilevel(v, 0, PredictionScheme::make(3));
  CHECK(inf_norm(w - v) == 0.0);
}

TEST_CASE("n=1 multilevel prediction is linear interpolation") {
  Vec coarse(2);
  coarse << 0, 2;
  const Vec fine = predict_multilevel(coarse, 2, PredictionScheme::make(1));
  REQUIRE(fine.size() == 5);
  Vec expected(5);
  expected << 0, 0.5, 1, 1.5, 2;
  CHECK(inf_norm(fine - expected) == 0.0);
}

TEST_CASE("n=3 multilevel prediction reproduces cubics exactly") {
  const std::vector<double> coeff = {0.3, -1.1, 0.7, 2.0};
  const Vec coarse = poly_samples(coeff, 4);
  for (int m : {1, 2, 3}) {
    const Vec fine = predict_multilevel(coarse, m, PredictionScheme::make(3));
    const Vec expected = poly_samples(coeff, 4 << m);
    CHECK(inf_norm(fine - expected) <= 1e-12);
  }
}

TEST_CASE("forward of predicted data has zero details") {
  for (int n : {1, 3, 5}) {
    const PredictionScheme s = PredictionScheme::make(n);
    const Vec coarse = random_vec(9, 11 + n);
    const Vec fine = predict_two_level(coarse, s);
    const TwoLevelSplit split = forward_two_level(fine, s);
    CHECK(inf_norm(split.detail) == 0.0);
    CHECK(inf_norm(split.coarse - coarse) == 0.0);
  }
}

TEST_CASE("two-level round trip on random data") {
  for (int n : {1, 3, 5}) {
    const PredictionScheme s = PredictionScheme::make(n);
    const Vec fine = random_vec(17, 23 + n);
    const TwoLevelSplit split = forward_two_level(fine, s);
    const Vec back = inverse_two_level(split.coarse, split.detail, s);
    CHECK(inf_norm(back - fine) <= 1e-13);
  }
}

TEST_CASE("inverse with zero details is pure prediction") {
  const PredictionScheme s = PredictionScheme::make(3);
  const Vec coarse = random_vec(9, 5);
  const Vec fine = inverse_two_level(coarse, Vec::Zero(8), s);
  CHECK(inf_norm(fine - predict_two_level(coarse, s)) == 0.0);
}

TEST_CASE("a unit detail lands on its odd fine index") {
  const PredictionScheme s = PredictionScheme::make(3);
  const int jc = 8;
  for (int i = 1; i <= jc; ++i) {
    Vec detail = Vec::Zero(jc);
    detail[i - 1] = 1.0;
    const Vec fine = inverse_two_level(Vec::Zero(jc + 1), detail, s);
    CHECK(fine[2 * i - 1] == 1.0);
    for (int even = 0; even <= 2 * jc; even += 2) CHECK(fine[even] == 0.0);
  }
}

TEST_CASE("consistency: decimate after predict is the identity") {
  for (int n : {1, 3, 5}) {
    const PredictionScheme s = PredictionScheme::make(n);
    const Vec coarse = random_vec(9, 31 + n);
    const Vec coarse_back = decimate(predict_two_level(coarse, s));
    CHECK(inf_norm(coarse_back - coarse) <= 1e-14);
  }
}

TEST_CASE("forward_full with base == top keeps the data") {
  const Vec z = random_vec(17, 2);
  const MultiResData rep = forward_full(z, 4, 4, PredictionScheme::make(3));
  CHECK(rep.details.empty());
  CHECK(inf_norm(rep.coarse - z) == 0.0);
}

TEST_CASE("forward_full of multilevel prediction has zero details") {
  const PredictionScheme s = PredictionScheme::make(3);
  const Vec coarse = random_vec(5, 13);
  const Vec z = predict_multilevel(coarse, 3, s);
  const MultiResData rep = forward_full(z, 0, 3, s);
  CHECK(inf_norm(rep.coarse - coarse) == 0.0);
  for (const Vec& d : rep.details) CHECK(inf_norm(d) == 0.0);
}

TEST_CASE("full round trip, L = 5") {
  for (int n : {1, 3, 5}) {
    const PredictionScheme s = PredictionScheme::make(n);
    const GridHierarchy g(8, 5);
    const Vec z = random_vec(g.points(5), 41 + n);
    const MultiResData rep = forward_full(z, 0, 5, s);
    CHECK(rep.scalar_count() == static_cast<std::size_t>(g.points(5)));
    const Vec back = inverse_full(rep, s);
    CHECK(inf_norm(back - z) <= 1e-12 * inf_norm(z));
  }
}

TEST_CASE("inverse_full with empty details returns the coarse data") {
  MultiResData rep;
  rep.coarse = random_vec(9, 3);
  rep.base_level = 2;
  rep.top_level = 2;
  CHECK(inf_norm(inverse_full(rep, PredictionScheme::make(3)) - rep.coarse) == 0.0);
}

TEST_CASE("inverse_full of a coarse delta interpolates it") {
  const PredictionScheme s = PredictionScheme::make(3);
  MultiResData rep;
  rep.coarse = Vec::Zero(9);
  rep.coarse[4] = 1.0;
  rep.base_level = 0;
  rep.top_level = 2;
  rep.details = {Vec::Zero(8), Vec::Zero(16)};
  const Vec fine = inverse_full(rep, s);
  CHECK(fine[4 * 4] == 1.0);
  for (int i = 0; i < 9; ++i)
    if (i != 4) CHECK(fine[4 * i] == 0.0);
}

TEST_CASE("forward_full is linear") {
  const PredictionScheme s = PredictionScheme::make(3);
  const Vec x = random_vec(65, 51);
  const Vec y = random_vec(65, 52);
  const double a = 0.7, b = -1.3;
  const MultiResData rx = forward_full(x, 0, 4, s);
  const MultiResData ry = forward_full(y, 0, 4, s);
  const MultiResData rxy = forward_full(a * x + b * y, 0, 4, s);
  CHECK(inf_norm(rxy.coarse - (a * rx.coarse + b * ry.coarse)) <= 1e-12);
  for (std::size_t j = 0; j < rxy.details.size(); ++j)
    CHECK(inf_norm(rxy.details[j] - (a * rx.details[j] + b * ry.details[j])) <= 1e-12);
}

TEST_CASE("detail decay of sin(2 pi x) approaches n+1") {
  const int L = 7;
  const GridHierarchy g(4, L);
  Vec z(g.points(L));
  for (int i = 0; i < z.size(); ++i)
    z[i] = std::sin(2.0 * M_PI * static_cast<double>(i) / g.cells(L));
  for (int n : {1, 3, 5}) {
    if (g.j0() < n) continue;  // n=5 needs a wider coarsest grid
    const PredictionScheme s = PredictionScheme::make(n);
    const MultiResData rep = forward_full(z, 0, L, s);
    std::vector<double> norms;
    for (const Vec& d : rep.details) norms.push_back(inf_norm(d));
    const double r_last = std::log2(norms[L - 2] / norms[L - 1]);
    const double r_prev = std::log2(norms[L - 3] / norms[L - 2]);
    CHECK(std::abs(r_last - (n + 1)) <= 0.3);
    CHECK(std::abs(r_prev - (n + 1)) <= 0.3);
  }
}

TEST_CASE("n=5 detail decay with j0 = 8") {
  const int L = 6;
  const GridHierarchy g(8, L);
  Vec z(g.points(L));
  for (int i = 0; i < z.size(); ++i)
    z[i] = std::sin(2.0 * M_PI * static_cast<double>(i) / g.cells(L));
  const MultiResData rep = forward_full(z, 0, L, PredictionScheme::make(5));
  std::vector<double> norms;
  for (const Vec& d : rep.details) norms.push_back(inf_norm(d));
  const double r_last = std::log2(norms[L - 2] / norms[L - 1]);
  CHECK(std::abs(r_last - 6.0) <= 0.3);
}

TEST_CASE("n=1 limit basis is the hat function") {
  const GridHierarchy g(4, 4);
  const Vec basis = sample_limit_basis(g, 0, 2, 3, PredictionScheme::make(1));
  const int factor = 8;  // 2^3
  for (int i = 0; i < basis.size(); ++i) {
    const double t = static_cast<double>(i) / factor;  // in coarse index units
    const double hat = std::max(0.0, 1.0 - std::abs(t - 2.0));
    CHECK(basis[i] == doctest::Approx(hat).epsilon(1e-14));
  }
}

TEST_CASE("limit basis is interpolatory at coarse nodes") {
  for (int n : {1, 3, 5}) {
    const GridHierarchy g(8, 4);
    const Vec basis = sample_limit_basis(g, 0, 3, 4, PredictionScheme::make(n));
    const int factor = 16;
    for (int i = 0; i <= g.cells(0); ++i)
      CHECK(basis[i * factor] == (i == 3 ? 1.0 : 0.0));
  }
}

TEST_CASE("n=3 interior limit basis sup is bounded in the refinement depth") {
  const GridHierarchy g(8, 4);
  std::vector<double> sups;
  for (int m = 4; m <= 10; ++m)
    sups.push_back(inf_norm(sample_limit_basis(g, 0, 4, m, PredictionScheme::make(3))));
  // samples are nested, so the sup can only grow; it must stabilize past m=6
  for (std::size_t i = 0; i + 1 < sups.size(); ++i) CHECK(sups[i + 1] >= sups[i] - 1e-15);
  for (std::size_t i = 2; i + 1 < sups.size(); ++i)
    CHECK(sups[i + 1] <= sups[i] * (1.0 + 1e-6));
  CHECK(sups.back() < 2.0);
}

TEST_CASE("property S probe: interpolatory lower bound") {
  for (int n : {1, 3, 5}) {
    const GridHierarchy g(8, 4);
    const StabilityEstimate est = property_s_probe(PredictionScheme::make(n), g, 50, 99);
    CHECK(est.d1 >= 1.0 - 1e-12);
  }
}

TEST_CASE("property S probe: n=1 predictions are convex combinations") {
  const GridHierarchy g(4, 4);
  const StabilityEstimate est = property_s_probe(PredictionScheme::make(1), g, 100, 7);
  CHECK(est.d2 <= 1.0 + 1e-12);

  // exhaustive over canonical vectors
  const PredictionScheme s = PredictionScheme::make(1);
  double worst = 0.0;
  for (int i = 0; i <= 4; ++i) {
    Vec e = Vec::Zero(5);
    e[i] = 1.0;
    Vec v = e;
    for (int k = 1; k <= 4; ++k) {
      v = predict_two_level(v, s);
      worst = std::max(worst, inf_norm(v));
    }
  }
  CHECK(worst <= 1.0 + 1e-12);
}

TEST_CASE("property S probe: d2 stable as the ladder grows") {
  for (int n : {3, 5}) {
    std::vector<double> estimates;
    for (int L = 3; L <= 6; ++L) {
      const GridHierarchy g(8, L);
      estimates.push_back(property_s_probe(PredictionScheme::make(n), g, 60, 1234).d2);
    }
    for (std::size_t i = 0; i + 1 < estimates.size(); ++i) {
      CHECK(estimates[i + 1] / estimates[i] <= 1.05);
      CHECK(estimates[i + 1] >= estimates[i] - 1e-12);
    }
  }
}

TEST_CASE("multi-res data counts are non-redundant") {
  const GridHierarchy g(4, 3);
  const Vec z = random_vec(g.points(3), 77);
  for (int base = 0; base <= 3; ++base) {
    const MultiResData rep = forward_full(z, base, 3, PredictionScheme::make(3));
    CHECK(rep.scalar_count() == static_cast<std::size_t>(g.points(3)));
  }
}
