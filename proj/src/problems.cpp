#include "mropt/problems.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mropt/mr2d.hpp"
#include "mropt/optimizers.hpp"

namespace mropt {

namespace {

double bvp1d_forcing(double t) {
  return 1e6 * t * (1.0 - t) * (t - 0.5) * (t - 0.25) * (0.75 - t);
}

double poisson2d_forcing(double x, double y) {
  return std::sin(4.0 * M_PI * x * (1.0 - x) * y * (1.0 - y));
}

Vec embed_interior_1d(const Vec& interior, int total) {
  Vec full = Vec::Zero(total);
  full.segment(1, interior.size()) = interior;
  return full;
}

}  // namespace

ProblemInstance make_bvp1d(const GridHierarchy& hierarchy) {
  if (hierarchy.dim() != 1) throw std::invalid_argument("make_bvp1d: hierarchy must be 1D");
  const int J = hierarchy.cells(hierarchy.levels());
  const int N = J + 1;
  const double J2 = static_cast<double>(J) * J;

  // Full-grid form with zero rows/columns at the pinned endpoints; interior
  // rows are the centered discretization (-z_{i-1} + 2 z_i - z_{i+1}) J^2 + 2 z_i.
  std::vector<Eigen::Triplet<double>> trips;
  std::vector<Eigen::Triplet<double>> trips_int;
  Vec b = Vec::Zero(N);
  Vec b_int(J - 1);
  for (int i = 1; i < J; ++i) {
    trips.emplace_back(i, i, 2.0 * J2 + 2.0);
    trips_int.emplace_back(i - 1, i - 1, 2.0 * J2 + 2.0);
    if (i - 1 >= 1) {
      trips.emplace_back(i, i - 1, -J2);
      trips_int.emplace_back(i - 1, i - 2, -J2);
    }
    if (i + 1 <= J - 1) {
      trips.emplace_back(i, i + 1, -J2);
      trips_int.emplace_back(i - 1, i, -J2);
    }
    b[i] = bvp1d_forcing(static_cast<double>(i) / J);
    b_int[i - 1] = b[i];
  }
  SpMat A(N, N);
  A.setFromTriplets(trips.begin(), trips.end());
  A.makeCompressed();
  SpMat A_int(J - 1, J - 1);
  A_int.setFromTriplets(trips_int.begin(), trips_int.end());
  A_int.makeCompressed();

  // Evaluation goes through the stencil directly, not the assembled matrix.
  auto eval = [J, J2](const Vec& z) {
    double acc = 0.0;
    for (int i = 1; i < J; ++i) {
      double az = (2.0 * J2 + 2.0) * z[i];
      if (i - 1 >= 1) az -= J2 * z[i - 1];
      if (i + 1 <= J - 1) az -= J2 * z[i + 1];
      acc += 0.5 * z[i] * az - bvp1d_forcing(static_cast<double>(i) / J) * z[i];
    }
    return acc;
  };

  ProblemInstance p{
      "bvp1d", hierarchy, CountedObjective(eval, QuadraticForm{A, b, 0.0}),
      Vec::Zero(N),       {0, J},    embed_interior_1d(solve_quadratic_direct(A_int, b_int), N)};
  return p;
}

ProblemInstance make_poisson2d(const GridHierarchy& hierarchy) {
  if (hierarchy.dim() != 2) throw std::invalid_argument("make_poisson2d: hierarchy must be 2D");
  const int J = hierarchy.cells(hierarchy.levels());
  const int P = J + 1;
  const int N = P * P;
  const double J2 = static_cast<double>(J) * J;
  auto flat = [P](int iy, int ix) { return iy * P + ix; };

  std::vector<Eigen::Triplet<double>> trips;
  std::vector<Eigen::Triplet<double>> trips_int;
  Vec b = Vec::Zero(N);
  const int n_int = (J - 1) * (J - 1);
  Vec b_int(n_int);
  auto flat_int = [J](int iy, int ix) { return (iy - 1) * (J - 1) + (ix - 1); };
  for (int iy = 1; iy < J; ++iy) {
    for (int ix = 1; ix < J; ++ix) {
      const int row = flat(iy, ix);
      const int row_int = flat_int(iy, ix);
      trips.emplace_back(row, row, 4.0 * J2);
      trips_int.emplace_back(row_int, row_int, 4.0 * J2);
      const int nbrs[4][2] = {{iy, ix - 1}, {iy, ix + 1}, {iy - 1, ix}, {iy + 1, ix}};
      for (const auto& nb : nbrs) {
        if (nb[0] >= 1 && nb[0] <= J - 1 && nb[1] >= 1 && nb[1] <= J - 1) {
          trips.emplace_back(row, flat(nb[0], nb[1]), -J2);
          trips_int.emplace_back(row_int, flat_int(nb[0], nb[1]), -J2);
        }
      }
      const double f = poisson2d_forcing(static_cast<double>(ix) / J, static_cast<double>(iy) / J);
      b[row] = f;
      b_int[row_int] = f;
    }
  }
  SpMat A(N, N);
  A.setFromTriplets(trips.begin(), trips.end());
  A.makeCompressed();
  SpMat A_int(n_int, n_int);
  A_int.setFromTriplets(trips_int.begin(), trips_int.end());
  A_int.makeCompressed();

  auto eval = [J, J2, P](const Vec& z) {
    double acc = 0.0;
    for (int iy = 1; iy < J; ++iy) {
      for (int ix = 1; ix < J; ++ix) {
        const double zi = z[iy * P + ix];
        double az = 4.0 * J2 * zi;
        if (ix - 1 >= 1) az -= J2 * z[iy * P + ix - 1];
        if (ix + 1 <= J - 1) az -= J2 * z[iy * P + ix + 1];
        if (iy - 1 >= 1) az -= J2 * z[(iy - 1) * P + ix];
        if (iy + 1 <= J - 1) az -= J2 * z[(iy + 1) * P + ix];
        acc += 0.5 * zi * az -
               poisson2d_forcing(static_cast<double>(ix) / J, static_cast<double>(iy) / J) * zi;
      }
    }
    return acc;
  };

  std::vector<int> mask;
  for (int iy = 0; iy <= J; ++iy)
    for (int ix = 0; ix <= J; ++ix)
      if (iy == 0 || iy == J || ix == 0 || ix == J) mask.push_back(flat(iy, ix));

  const Vec z_int = solve_quadratic_direct(A_int, b_int);
  Vec reference = Vec::Zero(N);
  for (int iy = 1; iy < J; ++iy)
    for (int ix = 1; ix < J; ++ix) reference[flat(iy, ix)] = z_int[flat_int(iy, ix)];

  ProblemInstance p{"poisson2d",   hierarchy, CountedObjective(eval, QuadraticForm{A, b, 0.0}),
                    Vec::Zero(N),  mask,      reference};
  return p;
}

ProblemInstance make_mins(const GridHierarchy& hierarchy) {
  if (hierarchy.dim() != 2) throw std::invalid_argument("make_mins: hierarchy must be 2D");
  const int J = hierarchy.cells(hierarchy.levels());
  const int P = J + 1;
  const int N = P * P;

  // Cell (i,j), i along x and j along y, split into the two triangles that
  // share the (i,j)-(i+1,j+1) diagonal; per-cell gradients a,b,c,d.
  auto eval = [J, P](const Vec& z) {
    const double Jd = J;
    double acc = 0.0;
    for (int j = 0; j < J; ++j) {
      for (int i = 0; i < J; ++i) {
        const double z00 = z[j * P + i];
        const double z01 = z[(j + 1) * P + i];
        const double z11 = z[(j + 1) * P + i + 1];
        const double z10 = z[j * P + i + 1];
        const double a = Jd * (z01 - z00);
        const double b = Jd * (z11 - z01);
        const double c = Jd * (z11 - z10);
        const double d = Jd * (z10 - z00);
        acc += std::sqrt(1.0 + a * a + b * b) + std::sqrt(1.0 + c * c + d * d);
      }
    }
    return acc / (2.0 * Jd * Jd);
  };

  std::vector<int> mask;
  Vec guess(N);
  for (int iy = 0; iy <= J; ++iy) {
    for (int ix = 0; ix <= J; ++ix) {
      const double x = static_cast<double>(ix) / J;
      guess[iy * P + ix] = x * (1.0 - x);
      if (iy == 0 || iy == J || ix == 0 || ix == J) mask.push_back(iy * P + ix);
    }
  }

  ProblemInstance p{"mins", hierarchy, CountedObjective(eval), guess, mask, std::nullopt};
  return p;
}

ProblemInstance make_morebv(const GridHierarchy& hierarchy) {
  if (hierarchy.dim() != 2) throw std::invalid_argument("make_morebv: hierarchy must be 2D");
  const int J = hierarchy.cells(hierarchy.levels());
  const int P = J + 1;
  const int N = P * P;

  auto eval = [J, P](const Vec& z) {
    const double Jd = J;
    const double half_h2 = 1.0 / (2.0 * Jd * Jd);
    double acc = 0.0;
    for (int j = 1; j < J; ++j) {
      for (int i = 1; i < J; ++i) {
        const double lap = 4.0 * z[j * P + i] - z[j * P + i - 1] - z[j * P + i + 1] -
                           z[(j - 1) * P + i] - z[(j + 1) * P + i];
        const double s = z[j * P + i] + i / Jd + j / Jd + 1.0;
        const double r = lap + half_h2 * s * s * s;
        acc += r * r;
      }
    }
    return acc;
  };

  std::vector<int> mask;
  for (int iy = 0; iy <= J; ++iy)
    for (int ix = 0; ix <= J; ++ix)
      if (iy == 0 || iy == J || ix == 0 || ix == J) mask.push_back(iy * P + ix);

  ProblemInstance p{"morebv", hierarchy, CountedObjective(eval), Vec::Zero(N), mask, std::nullopt};
  return p;
}

ProblemInstance make_problem(const std::string& name, const GridHierarchy& hierarchy) {
  if (name == "bvp1d") return make_bvp1d(hierarchy);
  if (name == "poisson2d") return make_poisson2d(hierarchy);
  if (name == "mins") return make_mins(hierarchy);
  if (name == "morebv") return make_morebv(hierarchy);
  throw std::invalid_argument("make_problem: unknown problem '" + name + "'");
}

Vec compute_numerical_reference(const ProblemInstance& problem, double tol) {
  const Eigen::Index total = problem.initial_guess.size();
  std::vector<char> pinned(total, 0);
  for (int idx : problem.boundary_mask) pinned[idx] = 1;
  std::vector<int> free_idx;
  for (Eigen::Index i = 0; i < total; ++i)
    if (!pinned[i]) free_idx.push_back(static_cast<int>(i));

  const Vec base = problem.initial_guess;
  CountedObjective on_free([base, free_idx, obj = problem.objective](const Vec& x) {
    Vec z = base;
    for (std::size_t j = 0; j < free_idx.size(); ++j) z[free_idx[j]] = x[j];
    return obj(z);
  });
  Vec x0(free_idx.size());
  for (std::size_t j = 0; j < free_idx.size(); ++j) x0[j] = base[free_idx[j]];
  OptimizerConfig cfg;
  cfg.tol_x = tol;
  const OptResult res = minimize_quasi_newton(on_free, x0, cfg);
  Vec z = base;
  for (std::size_t j = 0; j < free_idx.size(); ++j) z[free_idx[j]] = res.x[j];
  return z;
}

SmoothnessTables smoothness_probe(const Mat& z) {
  const int J = static_cast<int>(z.rows()) - 1;
  if (z.rows() != z.cols() || J < 4)
    throw std::invalid_argument("smoothness_probe: need a square grid with J >= 4");
  const double Jd = J;
  const double s3 = Jd * Jd * Jd / 2.0;
  const double s2 = Jd * Jd;
  SmoothnessTables t{Mat::Zero(J + 1, J + 1), Mat::Zero(J + 1, J + 1), Mat::Zero(J + 1, J + 1),
                     Mat::Zero(J + 1, J + 1)};
  for (int iy = 0; iy <= J; ++iy) {
    for (int ix = 2; ix <= J - 2; ++ix)
      t.third_x(iy, ix) =
          (-z(iy, ix - 2) + 2.0 * z(iy, ix - 1) - 2.0 * z(iy, ix + 1) + z(iy, ix + 2)) * s3;
    for (int ix = 1; ix <= J - 1; ++ix)
      t.second_x(iy, ix) = (z(iy, ix - 1) - 2.0 * z(iy, ix) + z(iy, ix + 1)) * s2;
  }
  for (int ix = 0; ix <= J; ++ix) {
    for (int iy = 2; iy <= J - 2; ++iy)
      t.third_y(iy, ix) =
          (-z(iy - 2, ix) + 2.0 * z(iy - 1, ix) - 2.0 * z(iy + 1, ix) + z(iy + 2, ix)) * s3;
    for (int iy = 1; iy <= J - 1; ++iy)
      t.second_y(iy, ix) = (z(iy - 1, ix) - 2.0 * z(iy, ix) + z(iy + 1, ix)) * s2;
  }
  return t;
}

}  // namespace mropt
