#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <utility>

#include "mropt/types.hpp"

namespace mropt {

/// F(z) = 0.5 z'Az - b'z + c with A symmetric. For problems with pinned
/// entries, the corresponding rows and columns of A (and entries of b) are
/// zero, so the form never reads pinned components.
struct QuadraticForm {
  SpMat A;
  Vec b;
  double c = 0.0;

  double value(const Vec& z) const { return 0.5 * z.dot(A * z) - b.dot(z) + c; }
};

/// Black-box objective with a shared, thread-safe evaluation counter.
/// Copies share the counter, so wrappers built on top of a CountedObjective
/// keep the underlying count consistent. An optional exposed quadratic form
/// enables direct solves and reduced auxiliary problems.
class CountedObjective {
 public:
  using Fn = std::function<double(const Vec&)>;

  explicit CountedObjective(Fn fn)
      : fn_(std::move(fn)), counter_(std::make_shared<std::atomic<std::int64_t>>(0)) {}

  CountedObjective(Fn fn, QuadraticForm form)
      : fn_(std::move(fn)),
        counter_(std::make_shared<std::atomic<std::int64_t>>(0)),
        form_(std::make_shared<const QuadraticForm>(std::move(form))) {}

  double operator()(const Vec& x) const {
    counter_->fetch_add(1, std::memory_order_relaxed);
    return fn_(x);
  }

  std::int64_t evaluations() const { return counter_->load(std::memory_order_relaxed); }

  /// nullptr when no quadratic form is exposed.
  const QuadraticForm* quadratic_form() const { return form_.get(); }

 private:
  Fn fn_;
  std::shared_ptr<std::atomic<std::int64_t>> counter_;
  std::shared_ptr<const QuadraticForm> form_;
};

}  // namespace mropt
