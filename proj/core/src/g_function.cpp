#include <algorithm>

#include "search_detail.hpp"
#include "spernerlab/errors.hpp"
#include "spernerlab/search.hpp"

namespace spernerlab {

namespace {

using detail::Bitset;

class GSearcher {
 public:
  GSearcher(std::vector<Mask> layer, int t, int level, int n, detail::Stopwatch& watch)
      : layer_(std::move(layer)), watch_(watch) {
    const std::size_t size = layer_.size();
    std::vector<Mask> top;
    if (level <= n) for_each_subset_of_size(full_mask(n), level, [&](Mask m) { top.push_back(m); });
    compat_.assign(size, Bitset(size));
    conflict_.assign(size, Bitset(size));
    shade_.assign(size, Bitset(top.size()));
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        if (cardinality(layer_[i] & layer_[j]) >= t) {
          compat_[i].set(j);
        } else {
          conflict_[i].set(j);
        }
      }
      for (std::size_t u = 0; u < top.size(); ++u) {
        if (is_subset(layer_[i], top[u])) shade_[i].set(u);
      }
    }
    pools_.assign(size + 2, Bitset(size));
    covers_.assign(size + 2, Bitset(top.size()));
    avail_.resize(size);
    clique_.resize(size);
  }

  void run() {
    if (layer_.empty()) return;
    // Any nonempty family can be relabeled to contain the first set.
    pools_[0] = compat_[0];
    pools_[0].reset(0);
    covers_[0] = shade_[0];
    chosen_.assign(1, 0);
    expand(0);
  }

  std::uint64_t nodes() const { return nodes_.load(); }
  long long best() const { return best_; }
  const std::vector<Mask>& witness() const { return witness_; }

 private:
  void expand(std::size_t depth) {
    if (!watch_.tick(nodes_)) return;
    const long long covered = static_cast<long long>(covers_[depth].count());
    const long long value = static_cast<long long>(chosen_.size()) - covered;
    if (value > best_) {
      best_ = value;
      witness_.clear();
      for (auto c : chosen_) witness_.push_back(layer_[c]);
    }
    Bitset& pool = pools_[depth];
    while (pool.any()) {
      // Each added set raises |G| by one and never shrinks the shade.
      const long long base = static_cast<long long>(chosen_.size()) - covered;
      const long long need = best_ - base;
      if (need >= static_cast<long long>(pool.count())) return;
      const std::size_t bound = detail::clique_cover_count(pool, conflict_, nullptr, 0,
                                                           static_cast<std::size_t>(std::max(0LL, need)), avail_, clique_);
      if (static_cast<long long>(bound) <= need) return;
      const auto v = pool.find_first();
      pool.reset(v);
      pools_[depth + 1] = pool;
      pools_[depth + 1] &= compat_[v];
      covers_[depth + 1] = covers_[depth];
      covers_[depth + 1] |= shade_[v];
      chosen_.push_back(v);
      expand(depth + 1);
      chosen_.pop_back();
      if (watch_.stopped()) return;
    }
  }

  std::vector<Mask> layer_;
  detail::Stopwatch& watch_;
  std::atomic<std::uint64_t> nodes_{0};
  std::vector<Bitset> compat_;
  std::vector<Bitset> conflict_;
  std::vector<Bitset> shade_;
  std::vector<Bitset> pools_;
  std::vector<Bitset> covers_;
  Bitset avail_;
  Bitset clique_;
  std::vector<std::size_t> chosen_;
  long long best_ = 0;
  std::vector<Mask> witness_;
};

}  // namespace

long long g_objective(const Family& g, int level) {
  if (!g.empty() && !g.is_uniform()) throw PreconditionError("g_objective: family must be uniform");
  const long long shade_size = level > g.n() ? 0 : static_cast<long long>(shade(g, level).size());
  return static_cast<long long>(g.size()) - shade_size;
}

GFunctionResult g_function(const Params& params, SearchBudget budget) {
  params.require_odd("g_function");
  params.require_enumerable("g_function");
  const int n = params.n();
  const int base = (n + params.t() - 1) / 2;
  const int level = base + params.k();
  std::vector<Mask> layer;
  for_each_subset_of_size(full_mask(n), base, [&](Mask m) { layer.push_back(m); });
  if (layer.size() > kMaxSearchCandidates) throw PreconditionError("g_function: layer too large to index");

  detail::Stopwatch watch(budget);
  GSearcher searcher(std::move(layer), params.t(), level, n, watch);
  searcher.run();

  GFunctionResult r;
  r.value = searcher.best();
  r.witness = Family(n, searcher.witness());
  if (!is_t_intersecting(r.witness, params.t()) || g_objective(r.witness, level) != r.value) {
    throw BugTrap("g_function: witness fails re-check: " + r.witness.str());
  }
  r.nodes = searcher.nodes();
  r.budget_exceeded = watch.stopped();
  r.proven_optimal = !r.budget_exceeded;
  r.elapsed = watch.elapsed();
  return r;
}

}  // namespace spernerlab
