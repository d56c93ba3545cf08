#include "mropt/optimizers.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SparseCholesky>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mropt {

namespace {

constexpr double kArmijoC1 = 1e-4;
constexpr int kMaxHalvings = 60;
constexpr int kMaxIterationsGuard = 1000000;

bool cap_reached(const CountedObjective& f, std::int64_t start, std::int64_t cap) {
  return cap > 0 && f.evaluations() - start >= cap;
}

// Central differences with absolute step fd_step * max(1, |x_i|).
bool fd_gradient(const CountedObjective& f, const Vec& x, double fd_step, Vec& grad) {
  const int n = static_cast<int>(x.size());
  grad.resize(n);
  Vec probe = x;
  for (int i = 0; i < n; ++i) {
    const double h = fd_step * std::max(1.0, std::abs(x[i]));
    probe[i] = x[i] + h;
    const double fp = f(probe);
    probe[i] = x[i] - h;
    const double fm = f(probe);
    probe[i] = x[i];
    if (!std::isfinite(fp) || !std::isfinite(fm)) return false;
    grad[i] = (fp - fm) / (2.0 * h);
  }
  return true;
}

}  // namespace

std::string to_string(OptStatus status) {
  switch (status) {
    case OptStatus::converged: return "converged";
    case OptStatus::max_evals: return "max_evals";
    case OptStatus::line_search_failed: return "line_search_failed";
    case OptStatus::non_finite: return "non_finite";
  }
  return "unknown";
}

OptResult minimize_quasi_newton(const CountedObjective& objective, const Vec& x0,
                                const OptimizerConfig& config) {
  if (config.tol_x <= 0.0) throw std::invalid_argument("minimize_quasi_newton: tol_x must be > 0");
  const int n = static_cast<int>(x0.size());
  const std::int64_t start = objective.evaluations();

  OptResult result;
  result.x = x0;
  result.f = objective(x0);
  if (!std::isfinite(result.f)) {
    result.status = OptStatus::non_finite;
    result.evals = objective.evaluations() - start;
    return result;
  }
  if (n == 0) {
    result.evals = objective.evaluations() - start;
    return result;
  }

  Mat H = Mat::Identity(n, n);
  bool scale_pending = true;  // rescale H from the first curvature pair
  Vec grad(n), grad_next(n);

  if (!fd_gradient(objective, result.x, config.fd_step, grad)) {
    result.status = OptStatus::non_finite;
    result.evals = objective.evaluations() - start;
    return result;
  }

  for (int iter = 0; iter < kMaxIterationsGuard; ++iter) {
    result.iterations = iter + 1;
    if (cap_reached(objective, start, config.max_evals)) {
      result.status = OptStatus::max_evals;
      break;
    }

    Vec p = -(H * grad);
    double slope = grad.dot(p);
    if (!(slope < 0.0)) {  // not a descent direction: fall back to steepest descent
      H.setIdentity();
      scale_pending = true;
      p = -grad;
      slope = grad.dot(p);
      if (!(slope < 0.0)) {  // zero gradient
        result.status = OptStatus::converged;
        break;
      }
    }

    double alpha = 1.0;
    bool accepted = false;
    Vec x_next;
    double f_next = result.f;
    for (int ls = 0; ls < kMaxHalvings; ++ls) {
      x_next = result.x + alpha * p;
      f_next = objective(x_next);
      if (std::isfinite(f_next) && f_next <= result.f + kArmijoC1 * alpha * slope) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      result.status = OptStatus::line_search_failed;
      break;
    }

    if (!fd_gradient(objective, x_next, config.fd_step, grad_next)) {
      result.x = x_next;
      result.f = f_next;
      result.status = OptStatus::non_finite;
      break;
    }

    const Vec s = x_next - result.x;
    const Vec y = grad_next - grad;
    const double sy = s.dot(y);
    if (sy > 1e-14 * s.norm() * y.norm()) {
      if (scale_pending) {
        H *= sy / y.squaredNorm();
        scale_pending = false;
      }
      const double rho = 1.0 / sy;
      const Vec hy = H * y;
      H.noalias() += (rho * rho * y.dot(hy) + rho) * (s * s.transpose());
      H.noalias() -= rho * (hy * s.transpose() + s * hy.transpose());
    } else {
      H.setIdentity();
      scale_pending = true;
    }

    const double step = s.lpNorm<Eigen::Infinity>();
    result.x = std::move(x_next);
    result.f = f_next;
    grad = grad_next;
    if (step <= config.tol_x) {
      result.status = OptStatus::converged;
      break;
    }
  }

  result.evals = objective.evaluations() - start;
  return result;
}

OptResult minimize_pattern_search(const CountedObjective& objective, const Vec& x0,
                                  const OptimizerConfig& config) {
  if (config.tol_x <= 0.0)
    throw std::invalid_argument("minimize_pattern_search: tol_x must be > 0");
  if (config.initial_pattern_step <= 0.0)
    throw std::invalid_argument("minimize_pattern_search: initial_pattern_step must be > 0");
  const int n = static_cast<int>(x0.size());
  const std::int64_t start = objective.evaluations();

  OptResult result;
  result.x = x0;
  result.f = objective(x0);
  if (!std::isfinite(result.f)) {
    result.status = OptStatus::non_finite;
    result.evals = objective.evaluations() - start;
    return result;
  }

  double step = config.initial_pattern_step;
  Vec probe = result.x;
  while (step > config.tol_x && n > 0) {
    ++result.iterations;
    int best_coord = -1;
    double best_sign = 0.0;
    double best_f = result.f;
    bool capped = false;
    for (int i = 0; i < n && !capped; ++i) {
      for (double sign : {1.0, -1.0}) {
        if (cap_reached(objective, start, config.max_evals)) {
          capped = true;
          break;
        }
        probe[i] = result.x[i] + sign * step;
        const double f_probe = objective(probe);
        // Non-finite values lose every comparison.
        if (std::isfinite(f_probe) && f_probe < best_f) {
          best_f = f_probe;
          best_coord = i;
          best_sign = sign;
        }
      }
      probe[i] = result.x[i];
    }
    if (capped) {
      result.status = OptStatus::max_evals;
      break;
    }
    if (best_coord >= 0) {
      result.x[best_coord] += best_sign * step;
      result.f = best_f;
    } else {
      step *= 0.5;
    }
  }

  result.evals = objective.evaluations() - start;
  return result;
}

namespace {

void check_symmetric_dense(const Mat& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("solve_quadratic_direct: A must be square");
  const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  const double asym = (A - A.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * scale)
    throw std::invalid_argument("solve_quadratic_direct: A is not symmetric");
}

}  // namespace

Vec solve_quadratic_direct(const Mat& A, const Vec& b) {
  check_symmetric_dense(A);
  if (A.rows() != b.size())
    throw std::invalid_argument("solve_quadratic_direct: dimension mismatch");
  Eigen::LDLT<Mat> ldlt(A);
  if (ldlt.info() != Eigen::Success || ldlt.vectorD().minCoeff() <= 0.0)
    throw std::runtime_error("solve_quadratic_direct: matrix is not positive definite");
  return ldlt.solve(b);
}

Vec solve_quadratic_direct(const SpMat& A, const Vec& b) {
  if (A.rows() != A.cols()) throw std::invalid_argument("solve_quadratic_direct: A must be square");
  if (A.rows() != b.size())
    throw std::invalid_argument("solve_quadratic_direct: dimension mismatch");
  SpMat At = SpMat(A.transpose());
  SpMat diff = A - At;
  double scale = 1.0;
  for (int k = 0; k < A.outerSize(); ++k)
    for (SpMat::InnerIterator it(A, k); it; ++it) scale = std::max(scale, std::abs(it.value()));
  double asym = 0.0;
  for (int k = 0; k < diff.outerSize(); ++k)
    for (SpMat::InnerIterator it(diff, k); it; ++it) asym = std::max(asym, std::abs(it.value()));
  if (asym > 1e-10 * scale)
    throw std::invalid_argument("solve_quadratic_direct: A is not symmetric");

  Eigen::SimplicialLDLT<SpMat> ldlt(A);
  if (ldlt.info() != Eigen::Success || ldlt.vectorD().minCoeff() <= 0.0)
    throw std::runtime_error("solve_quadratic_direct: matrix is not positive definite");
  return ldlt.solve(b);
}

}  // namespace mropt
