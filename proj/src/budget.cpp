#include "prur/budget.hpp"

#include "prur/errors.hpp"

namespace prur {

namespace {
thread_local StepBudget* current_budget = nullptr;
}

void StepBudget::charge(std::uint64_t steps) {
  if (parent_ != nullptr) parent_->charge(steps);
  used_ += steps;
  if (used_ <= limit_) return;
  if (local_) throw WorkCapExceeded("work cap of " + std::to_string(limit_) + " exceeded");
  throw StepLimitExceeded("step limit of " + std::to_string(limit_) + " exceeded");
}

void StepBudget::charge_work(std::uint64_t units) {
  work_ += units;
  if (work_ >= kWorkPerStep) {
    const std::uint64_t steps = work_ / kWorkPerStep;
    work_ %= kWorkPerStep;
    charge(steps);
  }
}

BudgetScope::BudgetScope(StepBudget& budget) : previous_(current_budget) {
  budget.parent_ = previous_;
  current_budget = &budget;
}

BudgetScope::~BudgetScope() { current_budget = previous_; }

void charge_steps(std::uint64_t steps) {
  if (current_budget != nullptr) current_budget->charge(steps);
}

void charge_work(std::uint64_t units) {
  if (current_budget != nullptr) current_budget->charge_work(units);
}

}  // namespace prur
