#include "spernerlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include <boost/dynamic_bitset.hpp>

#include "spernerlab/binomial.hpp"
#include "spernerlab/errors.hpp"
#include "spernerlab/family_io.hpp"
#include "spernerlab/generators.hpp"
#include "search_detail.hpp"

namespace spernerlab {

namespace detail {

using Clock = std::chrono::steady_clock;

Stopwatch::Stopwatch(SearchBudget budget) : budget_(budget), start_(Clock::now()) {}

bool Stopwatch::tick(std::atomic<std::uint64_t>& nodes) {
  const std::uint64_t seen = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
  if (stopped_.load(std::memory_order_relaxed)) return false;
  if (budget_.nodes != 0 && seen > budget_.nodes) {
    stopped_.store(true);
    return false;
  }
  if (budget_.seconds > 0 && (seen & 1023) == 0 && elapsed().count() > budget_.seconds) {
    stopped_.store(true);
    return false;
  }
  return true;
}

std::chrono::duration<double> Stopwatch::elapsed() const { return Clock::now() - start_; }

std::size_t clique_cover_count(const Bitset& pool, const std::vector<Bitset>& conflicts,
                               const std::vector<std::uint64_t>* weights, std::uint64_t capacity,
                               std::size_t stop_above, Bitset& avail, Bitset& clique) {
  avail = pool;
  std::vector<std::uint64_t> lightest;
  for (auto v = avail.find_first(); v != Bitset::npos; v = avail.find_first()) {
    if (!weights && lightest.size() > stop_above) break;
    std::uint64_t w = weights ? (*weights)[v] : 0;
    avail.reset(v);
    clique = avail;
    clique &= conflicts[v];
    for (auto u = clique.find_first(); u != Bitset::npos; u = clique.find_next(u)) {
      avail.reset(u);
      clique &= conflicts[u];
      if (weights) w = std::min(w, (*weights)[u]);
    }
    lightest.push_back(w);
  }
  if (!weights) return lightest.size();
  // At most one member per clique; the cheapest cliques give the largest count.
  std::sort(lightest.begin(), lightest.end());
  std::size_t fit = 0;
  std::uint64_t used = 0;
  for (auto w : lightest) {
    if (used + w > capacity) break;
    used += w;
    ++fit;
  }
  return fit;
}

}  // namespace detail

namespace {

using detail::Bitset;

struct Index {
  int n = 0;
  int k = 0;
  std::vector<Mask> masks;
  std::vector<std::uint64_t> weight;
  std::vector<Bitset> compat;
  std::vector<Bitset> conflict;
  std::vector<Bitset> sub;
  std::vector<Bitset> sup;
  std::uint64_t capacity = 0;
};

/// Chain-averaging denominator of a set of size i. Without an intersection
/// constraint this is the LYM weight C(n, i). With one, sets of size <= n/2
/// use C(n, i - 1) (Greene-Katona-Kleitman inequality for intersecting
/// antichains). A k-Sperner family splits into k antichains, so its total
/// weight is at most k.
BigInt layer_denominator(int n, int i, int s) {
  if (s >= 1 && i >= 1 && 2 * i <= n) return binomial(n, i - 1);
  return binomial(n, i);
}

std::uint64_t lcm_of_layers(int n, int lo, int hi, int s) {
  BigInt l = 1;
  for (int i = lo; i <= hi; ++i) {
    const BigInt c = layer_denominator(n, i, s);
    l = l / boost::multiprecision::gcd(l, c) * c;
  }
  if (l > BigInt(std::numeric_limits<std::uint64_t>::max() / 1024)) {
    throw PreconditionError("max_family: layer weight denominator does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(l);
}

Index build_index(int n, int k, int s, int lo, int hi) {
  Index ix;
  ix.n = n;
  ix.k = k;
  const int first = std::max(lo, s);
  for (int size = first; size <= hi; ++size) {
    for_each_subset_of_size(full_mask(n), size, [&](Mask m) { ix.masks.push_back(m); });
    if (ix.masks.size() > kMaxSearchCandidates) {
      throw PreconditionError("max_family: more than " + std::to_string(kMaxSearchCandidates) +
                              " candidate sets; restrict the layer window");
    }
  }
  // Largest layers first, canonical order within a layer.
  std::stable_sort(ix.masks.begin(), ix.masks.end(), [n](Mask a, Mask b) {
    const BigInt ca = binomial(n, cardinality(a));
    const BigInt cb = binomial(n, cardinality(b));
    if (ca != cb) return ca > cb;
    return canonical_less(a, b);
  });
  const std::size_t size = ix.masks.size();
  const std::uint64_t l = lcm_of_layers(n, first, std::max(first, hi), s);
  for (Mask m : ix.masks) {
    ix.weight.push_back(l / static_cast<std::uint64_t>(layer_denominator(n, cardinality(m), s)));
  }
  ix.capacity = l * static_cast<std::uint64_t>(k);
  ix.compat.assign(size, Bitset(size));
  ix.conflict.assign(size, Bitset(size));
  ix.sub.assign(size, Bitset(size));
  ix.sup.assign(size, Bitset(size));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const Mask a = ix.masks[i];
      const Mask b = ix.masks[j];
      if (cardinality(a & b) >= s) {
        ix.compat[i].set(j);
      } else {
        ix.conflict[i].set(j);
      }
      if (is_proper_subset(b, a)) ix.sub[i].set(j);
      if (is_proper_subset(a, b)) ix.sup[i].set(j);
    }
  }
  return ix;
}

class Searcher {
 public:
  Searcher(const Index& ix, int t, Pruning pruning, detail::Stopwatch& watch, std::atomic<std::uint64_t>& nodes,
           std::atomic<int>& shared_best)
      : ix_(ix),
        t_(t),
        pruning_(pruning),
        watch_(watch),
        nodes_(nodes),
        shared_best_(shared_best),
        avail_(ix.masks.size()),
        clique_(ix.masks.size()),
        forbidden_(ix.masks.size()),
        above_(static_cast<std::size_t>(ix.k) + 1, Bitset(ix.masks.size())),
        below_(static_cast<std::size_t>(ix.k) + 1, Bitset(ix.masks.size())) {}

  /// Explores families whose smallest member is `root`, every other member
  /// drawn from candidates of size >= |root|.
  void run(std::size_t root) {
    const std::size_t size = ix_.masks.size();
    Bitset pool(size);
    const int root_size = cardinality(ix_.masks[root]);
    for (std::size_t i = 0; i < size; ++i) {
      if (i != root && cardinality(ix_.masks[i]) >= root_size) pool.set(i);
    }
    pool &= ix_.compat[root];
    if (cardinality(ix_.masks[root]) < t_) pool.reset();
    pools_.assign(size + 2, Bitset(size));
    pools_[0] = pool;
    chosen_.assign(1, root);
    expand(0, ix_.weight[root]);
  }

  int best() const { return best_; }
  const std::vector<Mask>& witness() const { return witness_; }

 private:
  int incumbent() const { return std::max(best_, shared_best_.load(std::memory_order_relaxed)); }

  void record() {
    best_ = static_cast<int>(chosen_.size());
    witness_.clear();
    for (auto c : chosen_) witness_.push_back(ix_.masks[c]);
    int seen = shared_best_.load();
    while (seen < best_ && !shared_best_.compare_exchange_weak(seen, best_)) {
    }
  }

  void expand(std::size_t depth, std::uint64_t used) {
    if (!watch_.tick(nodes_)) return;
    const int size = static_cast<int>(chosen_.size());
    if (size > incumbent()) record();
    Bitset& pool = pools_[depth];
    drop_chain_violations(pool);
    while (true) {
      if (pool.none()) return;
      const int best = incumbent();
      if (size + static_cast<int>(pool.count()) <= best) return;
      if (pruning_ == Pruning::lym_clique) {
        const std::size_t need = static_cast<std::size_t>(best - size);
        const std::size_t bound =
            detail::clique_cover_count(pool, ix_.conflict, &ix_.weight, ix_.capacity - used, need, avail_, clique_);
        if (bound <= need) return;
      }
      const auto v = pool.find_first();
      pool.reset(v);
      if (used + ix_.weight[v] > ix_.capacity) continue;
      Bitset& child = pools_[depth + 1];
      child = pool;
      child &= ix_.compat[v];
      chosen_.push_back(v);
      expand(depth + 1, used + ix_.weight[v]);
      chosen_.pop_back();
      if (watch_.stopped()) return;
    }
  }

  /// Removes candidates that would close a (k+1)-chain with the chosen sets.
  void drop_chain_violations(Bitset& pool) {
    const int k = ix_.k;
    std::vector<std::size_t> order(chosen_);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return cardinality(ix_.masks[a]) < cardinality(ix_.masks[b]);
    });
    const std::size_t c = order.size();
    ending_.assign(c, 1);
    starting_.assign(c, 1);
    int longest = 0;
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (is_proper_subset(ix_.masks[order[j]], ix_.masks[order[i]])) ending_[i] = std::max(ending_[i], ending_[j] + 1);
      }
      longest = std::max(longest, ending_[i]);
    }
    if (longest < k) return;
    for (std::size_t i = c; i-- > 0;) {
      for (std::size_t j = i + 1; j < c; ++j) {
        if (is_proper_subset(ix_.masks[order[i]], ix_.masks[order[j]]))
          starting_[i] = std::max(starting_[i], starting_[j] + 1);
      }
    }
    for (int j = 1; j <= k; ++j) {
      above_[static_cast<std::size_t>(j)].reset();
      below_[static_cast<std::size_t>(j)].reset();
    }
    for (std::size_t i = 0; i < c; ++i) {
      for (int j = 1; j <= std::min(ending_[i], k); ++j) above_[static_cast<std::size_t>(j)] |= ix_.sup[order[i]];
      for (int j = 1; j <= std::min(starting_[i], k); ++j) below_[static_cast<std::size_t>(j)] |= ix_.sub[order[i]];
    }
    // A candidate is blocked when some j chosen sets lie below it and k - j above.
    forbidden_ = above_[static_cast<std::size_t>(k)];
    forbidden_ |= below_[static_cast<std::size_t>(k)];
    for (int j = 1; j < k; ++j) {
      clique_ = above_[static_cast<std::size_t>(j)];
      clique_ &= below_[static_cast<std::size_t>(k - j)];
      forbidden_ |= clique_;
    }
    pool -= forbidden_;
  }

  const Index& ix_;
  int t_;
  Pruning pruning_;
  detail::Stopwatch& watch_;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<int>& shared_best_;
  int best_ = 0;
  std::vector<Mask> witness_;
  std::vector<std::size_t> chosen_;
  std::vector<Bitset> pools_;
  Bitset avail_;
  Bitset clique_;
  Bitset forbidden_;
  std::vector<Bitset> above_;
  std::vector<Bitset> below_;
  std::vector<int> ending_;
  std::vector<int> starting_;
};

}  // namespace

std::pair<int, int> compression_window(const Params& params) {
  const int mid = params.middle();
  return {std::max(0, mid - params.k() + 1), std::min(params.n(), mid + 2 * params.k() - 2)};
}

SearchResult max_family(const SearchSpec& spec) {
  const Params& p = spec.params;
  p.require_enumerable("max_family");
  const int n = p.n();
  const int k = p.k();
  const int s = spec.intersection.value_or(p.t());
  if (s < 0) throw PreconditionError("max_family: intersection threshold must be >= 0");
  if (spec.layer_window && spec.use_compression) {
    throw PreconditionError("max_family: layer_window and use_compression are mutually exclusive");
  }

  SearchResult result;
  result.witness = Family(n);
  int lo = 0;
  int hi = n;
  if (spec.layer_window) {
    std::tie(lo, hi) = *spec.layer_window;
    if (lo > hi) throw PreconditionError("max_family: layer window requires lo <= hi");
    if (lo < 0 || hi > n) throw PreconditionError("max_family: layer window must lie within 0..n");
    result.window_transfers = lo == 0 && hi == n;
    result.window_note = "explicit layer window";
  } else if (spec.use_compression) {
    std::tie(lo, hi) = compression_window(p);
    if (p.even_case() && s == p.t()) {
      result.window_note = "compression band; up-compression and down-shift keep both predicates and never "
                           "shrink the family for n + t even";
    } else {
      result.window_transfers = false;
      result.window_note = p.even_case() ? "compression band; intersection threshold differs from t"
                                         : "compression band; n + t odd, band uses ceil((n + t)/2) and is "
                                           "not covered by the compression argument";
    }
  }
  result.window_lo = lo;
  result.window_hi = hi;

  detail::Stopwatch watch(spec.budget);
  // A single set is always valid; pairs need members of size >= s.
  result.best_size = 1;
  result.witness = Family(n, {full_mask(lo)});

  std::vector<int> roots;
  for (int r = lo; r <= hi; ++r) roots.push_back(r);
  std::stable_sort(roots.begin(), roots.end(), [n](int a, int b) { return binomial(n, a) > binomial(n, b); });

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<int> shared_best{1};
  struct Outcome {
    int best = 0;
    std::vector<Mask> witness;
  };
  std::vector<Outcome> outcomes(roots.size());
  std::vector<Index> indices;
  indices.reserve(roots.size());
  for (int r : roots) indices.push_back(build_index(n, k, s, std::max(lo, r), hi));

  // Greedy incumbents: candidate order, and k consecutive layers offered first.
  {
    const Index& widest = indices[static_cast<std::size_t>(
        std::min_element(roots.begin(), roots.end()) - roots.begin())];
    std::vector<std::vector<Mask>> orders{widest.masks};
    for (int a = lo; a <= hi; ++a) {
      std::vector<Mask> order = widest.masks;
      std::stable_partition(order.begin(), order.end(), [&](Mask m) {
        const int c = cardinality(m);
        return c >= a && c < a + k;
      });
      orders.push_back(std::move(order));
    }
    for (const auto& order : orders) {
      Family greedy = greedy_valid_family(n, order, s, k);
      if (static_cast<int>(greedy.size()) > result.best_size) {
        result.best_size = static_cast<int>(greedy.size());
        result.witness = greedy;
      }
    }
    shared_best = result.best_size;
  }

  auto run_root = [&](std::size_t i) {
    const Index& ix = indices[i];
    if (roots[i] < s) return;
    const auto it = std::find(ix.masks.begin(), ix.masks.end(), full_mask(roots[i]));
    if (it == ix.masks.end()) return;
    const auto root = static_cast<std::size_t>(it - ix.masks.begin());
    Searcher searcher(ix, s, spec.pruning, watch, nodes, shared_best);
    searcher.run(root);
    outcomes[i] = {searcher.best(), searcher.witness()};
  };

  int threads = spec.threads <= 0 ? static_cast<int>(std::max(1u, std::thread::hardware_concurrency())) : spec.threads;
  threads = std::min<int>(threads, static_cast<int>(roots.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < roots.size(); ++i) run_root(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < roots.size(); i = next++) run_root(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  for (const auto& o : outcomes) {
    if (o.best > result.best_size) {
      result.best_size = o.best;
      result.witness = Family(n, o.witness);
    }
  }
  if (static_cast<int>(result.witness.size()) != result.best_size || !is_t_intersecting(result.witness, s) ||
      !is_k_sperner(result.witness, k)) {
    throw BugTrap("max_family: witness fails re-check: " + result.witness.str());
  }
  result.nodes = std::min<std::uint64_t>(nodes.load(), spec.budget.nodes == 0 ? nodes.load() : spec.budget.nodes);
  result.budget_exceeded = watch.stopped();
  result.proven_optimal = spec.mode == SearchMode::exact && !result.budget_exceeded;
  result.elapsed = watch.elapsed();
  return result;
}

nlohmann::json search_result_to_json(const SearchSpec& spec, const SearchResult& r) {
  nlohmann::json j;
  j["n"] = spec.params.n();
  j["t"] = spec.params.t();
  j["k"] = spec.params.k();
  j["intersection"] = spec.intersection.value_or(spec.params.t());
  j["mode"] = spec.mode == SearchMode::exact ? "exact" : "lower-bound";
  j["window"] = {r.window_lo, r.window_hi};
  j["window_transfers"] = r.window_transfers;
  j["window_note"] = r.window_note;
  j["best_size"] = r.best_size;
  j["proven_optimal"] = r.proven_optimal;
  j["budget_exceeded"] = r.budget_exceeded;
  j["nodes"] = r.nodes;
  j["elapsed_secs"] = r.elapsed.count();
  j["witness"] = family_to_json(r.witness);
  return j;
}

}  // namespace spernerlab
