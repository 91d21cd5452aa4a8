#include "aslab/budget.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

#include "aslab/errors.hpp"

namespace aslab {

namespace {
std::atomic<unsigned> g_threads{0};
}

std::uint64_t evaluation_budget() {
  if (const char* env = std::getenv("ASLAB_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("ASLAB_BUDGET is not an integer: ") + env);
    }
  }
  return kDefaultBudget;
}

void require_budget(std::uint64_t cost, const std::string& what) {
  const auto cap = evaluation_budget();
  if (cost > cap)
    throw BudgetExceeded(what + " needs " + std::to_string(cost) + " evaluations, budget is " + std::to_string(cap));
}

unsigned worker_threads() {
  unsigned t = g_threads.load();
  if (t) return t;
  unsigned h = std::thread::hardware_concurrency();
  return h ? h : 1;
}

void set_threads(unsigned n) { g_threads.store(n); }

}  // namespace aslab
