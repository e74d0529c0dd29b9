#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>

namespace udg {

/// Limits for an exact search. Empty fields mean unlimited.
struct SearchBudget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::chrono::milliseconds> max_time;

  bool unlimited() const { return !max_nodes && !max_time; }
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::chrono::nanoseconds wall_time{0};
};

enum class SearchStatus {
  optimal,     // value proven
  incomplete,  // budget hit; only a bracket is known
};

namespace detail {

/// Shared stop flag plus node/time accounting. Workers call `tick()` once per node.
class BudgetGuard {
 public:
  explicit BudgetGuard(const SearchBudget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  /// Returns false once the search must stop.
  bool tick() {
    const auto n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (stopped_.load(std::memory_order_relaxed)) return false;
    if (budget_.max_nodes && n > *budget_.max_nodes) {
      exhaust();
      return false;
    }
    if (budget_.max_time && (n & 1023U) == 0 && elapsed() > *budget_.max_time) {
      exhaust();
      return false;
    }
    return true;
  }

  bool stopped() const { return stopped_.load(std::memory_order_relaxed); }
  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
  /// Stop without marking the budget as exhausted (e.g. a target was reached).
  void halt() { stopped_.store(true, std::memory_order_relaxed); }

  std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }
  std::chrono::nanoseconds elapsed() const { return std::chrono::steady_clock::now() - start_; }

  SearchStats stats() const { return {nodes(), elapsed()}; }

 private:
  void exhaust() {
    exhausted_.store(true, std::memory_order_relaxed);
    stopped_.store(true, std::memory_order_relaxed);
  }

  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stopped_{false};
  std::atomic<bool> exhausted_{false};
};

}  // namespace detail
}  // namespace udg
