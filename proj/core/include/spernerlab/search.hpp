#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "spernerlab/family.hpp"
#include "spernerlab/params.hpp"

namespace spernerlab {

/// Largest candidate pool the search will index.
inline constexpr std::size_t kMaxSearchCandidates = std::size_t{1} << 15;

enum class SearchMode { exact, lower_bound };

/// Upper bound used to prune a branch.
enum class Pruning {
  /// LYM budget combined with a clique cover of the conflict graph.
  lym_clique,
  /// Current size plus remaining candidate count.
  count_only,
};

struct SearchBudget {
  /// Zero means unlimited.
  std::uint64_t nodes = 0;
  /// Zero or negative means unlimited.
  double seconds = 0;
};

struct SearchSpec {
  explicit SearchSpec(Params p) : params(p) {}

  Params params;
  /// Sizes lo..hi inclusive.
  std::optional<std::pair<int, int>> layer_window;
  /// Restrict to the compression band. Incompatible with layer_window.
  bool use_compression = false;
  SearchBudget budget;
  SearchMode mode = SearchMode::exact;
  Pruning pruning = Pruning::lym_clique;
  /// Replaces params.t() as the pairwise intersection threshold; 0 drops the
  /// intersection constraint.
  std::optional<int> intersection;
  /// Zero picks the hardware concurrency. One is fully deterministic.
  int threads = 1;
};

struct SearchResult {
  int best_size = 0;
  Family witness{1};
  bool proven_optimal = false;
  std::uint64_t nodes = 0;
  std::chrono::duration<double> elapsed{0};
  /// Sizes actually searched.
  int window_lo = 0;
  int window_hi = 0;
  bool budget_exceeded = false;
  /// True when a restricted window is known not to lose the optimum.
  bool window_transfers = true;
  std::string window_note;
};

/// Compression band (n+t)/2 - k + 1 .. (n+t)/2 + 2k - 2, with the lower end
/// clamped to 0 and the upper end to n. Uses ceil((n+t)/2) for odd parity.
std::pair<int, int> compression_window(const Params& params);

/// Maximum size of an s-intersecting k-Sperner family inside the window,
/// where s = spec.intersection.value_or(t).
SearchResult max_family(const SearchSpec& spec);

nlohmann::json search_result_to_json(const SearchSpec& spec, const SearchResult& result);

struct GFunctionResult {
  /// max |G| - |shade of G at level base + k| over t-intersecting G in layer base.
  long long value = 0;
  Family witness{1};
  bool proven_optimal = false;
  std::uint64_t nodes = 0;
  std::chrono::duration<double> elapsed{0};
  bool budget_exceeded = false;
};

/// Objective |G| - |shade_{level}(G)| for a uniform family G.
long long g_objective(const Family& g, int level);

/// Exact g(n, t, k) by branch-and-bound on layer (n + t - 1)/2. Requires n + t odd.
GFunctionResult g_function(const Params& params, SearchBudget budget = {});

}  // namespace spernerlab
