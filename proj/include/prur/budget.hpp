#pragma once

#include <cstdint>
#include <limits>
#include <optional>

#include "prur/errors.hpp"

namespace prur {

class BudgetScope;

/// Work counter shared by the expensive kernels (S-pair reductions, candidate
/// trials). Exceeding the limit raises StepLimitExceeded.
class StepBudget {
 public:
  explicit StepBudget(std::uint64_t limit = std::numeric_limits<std::uint64_t>::max(), bool local = false)
      : limit_(limit), local_(local) {}

  void charge(std::uint64_t steps = 1);
  /// Fine-grained work such as coefficient products; every kWorkPerStep units
  /// count as one step.
  void charge_work(std::uint64_t units);

  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  friend class BudgetScope;
  std::uint64_t limit_;
  bool local_;
  std::uint64_t used_ = 0;
  std::uint64_t work_ = 0;
  /// Enclosing budget, charged as well.
  StepBudget* parent_ = nullptr;
};

inline constexpr std::uint64_t kWorkPerStep = 1U << 16;
/// Work units per polynomial term copied or merged; a term costs a few
/// allocations, far more than one limb product.
inline constexpr std::uint64_t kTermWork = 16;

/// Installs a budget for the current thread for the lifetime of the scope.
/// Budgets nest: work is charged to every enclosing budget.
class BudgetScope {
 public:
  explicit BudgetScope(StepBudget& budget);
  ~BudgetScope();
  BudgetScope(const BudgetScope&) = delete;
  BudgetScope& operator=(const BudgetScope&) = delete;

 private:
  StepBudget* previous_;
};

/// Runs f under a local cap of `steps`; returns nullopt if the cap is hit.
/// The work still counts against the enclosing budget.
template <class F>
auto with_work_cap(std::uint64_t steps, F&& f) -> std::optional<decltype(f())>;

/// Charges the budget installed on this thread, if any.
void charge_steps(std::uint64_t steps = 1);
void charge_work(std::uint64_t units);

template <class F>
auto with_work_cap(std::uint64_t steps, F&& f) -> std::optional<decltype(f())> {
  StepBudget cap(steps, true);
  BudgetScope scope(cap);
  try {
    return f();
  } catch (const WorkCapExceeded&) {
    return std::nullopt;
  }
}

}  // namespace prur
