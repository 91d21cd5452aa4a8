#pragma once

#include <cstdint>
#include <string>

namespace aslab {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t(1) << 24;

/// Evaluation cap for exhaustive enumerations: ASLAB_BUDGET if set, else 2^24.
std::uint64_t evaluation_budget();
/// Throws BudgetExceeded when `cost` exceeds the budget.
void require_budget(std::uint64_t cost, const std::string& what);

/// Worker count for parallel loops: set_threads() value, else hardware concurrency.
unsigned worker_threads();
void set_threads(unsigned n);

}  // namespace aslab
