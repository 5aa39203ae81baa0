#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "spernerlab/search.hpp"

namespace spernerlab::detail {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Shared node and wall-clock budget. Once exhausted it stays exhausted.
class Stopwatch {
 public:
  explicit Stopwatch(SearchBudget budget);
  /// Counts one node; false once the budget is spent.
  bool tick(std::atomic<std::uint64_t>& nodes);
  bool stopped() const { return stopped_.load(std::memory_order_relaxed); }
  std::chrono::duration<double> elapsed() const;

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::atomic<bool> stopped_{false};
};

/// Greedy clique cover of `pool` in the conflict graph, seeded in index order.
/// Without weights returns the clique count, stopping once it exceeds
/// `stop_above`. With weights returns how many cliques fit in `capacity`
/// when each is charged its lightest member. `avail` and `clique` are scratch.
std::size_t clique_cover_count(const Bitset& pool, const std::vector<Bitset>& conflicts,
                               const std::vector<std::uint64_t>* weights, std::uint64_t capacity,
                               std::size_t stop_above, Bitset& avail, Bitset& clique);

}  // namespace spernerlab::detail
