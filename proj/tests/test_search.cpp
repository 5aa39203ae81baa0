#include <gtest/gtest.h>

#include <algorithm>
#include <bit>

#include "spernerlab/bounds.hpp"
#include "spernerlab/constructions.hpp"
#include "spernerlab/errors.hpp"
#include "spernerlab/search.hpp"

using namespace spernerlab;

namespace {

int popcount(std::uint64_t x) { return std::popcount(x); }

// Maximum s-intersecting k-Sperner family over all subsets of [n], by DFS over
// sets in order of size with a plain remaining-count bound.
struct BruteForce {
  int n, s, k;
  std::vector<std::uint64_t> sets;
  std::vector<std::uint64_t> chosen;
  std::vector<int> height;
  int best = 0;

  BruteForce(int n_, int s_, int k_) : n(n_), s(s_), k(k_) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) sets.push_back(m);
    std::stable_sort(sets.begin(), sets.end(), [](auto a, auto b) { return popcount(a) < popcount(b); });
    run(0);
  }

  void run(std::size_t next) {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (std::size_t i = next; i < sets.size(); ++i) {
      if (static_cast<int>(chosen.size() + (sets.size() - i)) <= best) return;
      const auto x = sets[i];
      int h = 1;
      bool ok = true;
      for (std::size_t j = 0; j < chosen.size() && ok; ++j) {
        if (popcount(chosen[j] & x) < s) ok = false;
        if ((chosen[j] & x) == chosen[j]) h = std::max(h, height[j] + 1);
      }
      if (!ok || h > k) continue;
      chosen.push_back(x);
      height.push_back(h);
      run(i + 1);
      chosen.pop_back();
      height.pop_back();
    }
  }
};

// Largest |G| - |shade of G at level| over t-intersecting G inside one layer.
long long brute_g(int n, int t, int layer, int level) {
  std::vector<std::uint64_t> layer_sets;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (popcount(m) == layer) layer_sets.push_back(m);
  std::vector<std::uint64_t> level_sets;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (popcount(m) == level) level_sets.push_back(m);
  long long best = 0;
  std::vector<std::uint64_t> chosen;
  auto eval = [&] {
    long long above = 0;
    for (auto y : level_sets)
      if (std::any_of(chosen.begin(), chosen.end(), [&](auto x) { return (x & y) == x; })) ++above;
    best = std::max(best, static_cast<long long>(chosen.size()) - above);
  };
  auto rec = [&](auto&& self, std::size_t next) -> void {
    eval();
    for (std::size_t i = next; i < layer_sets.size(); ++i) {
      const auto x = layer_sets[i];
      if (std::any_of(chosen.begin(), chosen.end(), [&](auto c) { return popcount(c & x) < t; })) continue;
      chosen.push_back(x);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

SearchResult run(int n, int t, int k, Pruning pruning = Pruning::lym_clique) {
  SearchSpec spec{Params(n, t, k)};
  spec.pruning = pruning;
  return max_family(spec);
}

void expect_valid_witness(const SearchResult& r, const Params& p) {
  EXPECT_EQ(static_cast<int>(r.witness.size()), r.best_size);
  EXPECT_TRUE(is_t_intersecting(r.witness, p.t()));
  EXPECT_TRUE(is_k_sperner(r.witness, p.k()));
  if (!r.witness.empty()) {
    EXPECT_GE(r.witness.min_size(), r.window_lo);
    EXPECT_LE(r.witness.max_size(), r.window_hi);
  }
}

}  // namespace

TEST(Search, Examples) {
  EXPECT_EQ(run(4, 2, 1).best_size, 4);
  EXPECT_EQ(run(6, 2, 1).best_size, 15);
  EXPECT_EQ(run(5, 2, 2).best_size, 9);
  EXPECT_EQ(run(6, 1, 2).best_size, 26);
  const auto r = run(6, 2, 2);
  EXPECT_TRUE(r.proven_optimal);
  EXPECT_EQ(BigInt(r.best_size), even_case_bound(Params(6, 2, 2)));
}

TEST(Search, MatchesBruteForce) {
  for (int n = 1; n <= 5; ++n)
    for (int t = 1; t <= n; ++t)
      for (int k = 1; k <= 3; ++k) {
        const Params p(n, t, k);
        const BruteForce oracle(n, t, k);
        const auto r = run(n, t, k);
        ASSERT_TRUE(r.proven_optimal);
        ASSERT_EQ(r.best_size, oracle.best) << n << " " << t << " " << k;
        expect_valid_witness(r, p);
      }
}

TEST(Search, IntersectionOverrideMatchesBruteForce) {
  for (int n = 2; n <= 5; ++n)
    for (int s = 0; s <= 2; ++s)
      for (int k = 1; k <= 2; ++k) {
        SearchSpec spec{Params(n, 1, k)};
        spec.intersection = s;
        ASSERT_EQ(max_family(spec).best_size, BruteForce(n, s, k).best) << n << " " << s << " " << k;
      }
  SearchSpec sperner{Params(6, 1, 1)};
  sperner.intersection = 0;
  EXPECT_EQ(BigInt(max_family(sperner).best_size), sperner_bound(6));
}

TEST(Search, PruningModesAgree) {
  for (int n = 3; n <= 6; ++n)
    for (int t = 1; t <= 3 && t <= n; ++t)
      for (int k = 1; k <= 2; ++k) {
        const auto a = run(n, t, k, Pruning::lym_clique);
        const auto b = run(n, t, k, Pruning::count_only);
        ASSERT_EQ(a.best_size, b.best_size) << n << " " << t << " " << k;
        EXPECT_LE(a.nodes, b.nodes);
      }
}

// Per cycle: an intersecting antichain of arcs has
// sum_{|A| <= n/2} (n - |A| + 1)/(n |A|) + sum_{|A| > n/2} 1/n <= 1,
// which averages to the size-dependent weights behind the search bound.
TEST(Search, CycleWeightInequalityExhaustive) {
  for (int n = 2; n <= 7; ++n) {
    std::vector<std::uint64_t> arcs;
    for (int len = 1; len < n; ++len)
      for (int start = 0; start < n; ++start) {
        std::uint64_t m = 0;
        for (int i = 0; i < len; ++i) m |= std::uint64_t{1} << ((start + i) % n);
        arcs.push_back(m);
      }
    arcs.push_back((std::uint64_t{1} << n) - 1);
    auto w = [&](std::uint64_t a) {
      const int i = popcount(a);
      return 2 * i <= n ? Rational(n - i + 1, n * i) : Rational(1, n);
    };
    Rational worst = 0;
    std::vector<std::uint64_t> chosen;
    auto rec = [&](auto&& self, std::size_t next, Rational total) -> void {
      worst = std::max(worst, total);
      for (std::size_t i = next; i < arcs.size(); ++i) {
        const auto x = arcs[i];
        const bool ok = std::all_of(chosen.begin(), chosen.end(), [&](auto c) {
          return (c & x) != 0 && (c & x) != c && (c & x) != x;
        });
        if (!ok) continue;
        chosen.push_back(x);
        self(self, i + 1, total + w(x));
        chosen.pop_back();
      }
    };
    rec(rec, 0, Rational(0));
    EXPECT_LE(worst, Rational(1)) << "n=" << n;
    EXPECT_EQ(worst, Rational(1)) << "n=" << n;
  }
}

TEST(Search, DeterministicSingleThread) {
  const auto a = run(6, 1, 2);
  const auto b = run(6, 1, 2);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.nodes, b.nodes);
  expect_valid_witness(a, Params(6, 1, 2));
}

TEST(Search, ThreadedAgreesOnValue) {
  SearchSpec spec{Params(6, 1, 2)};
  spec.threads = 4;
  const auto r = max_family(spec);
  EXPECT_EQ(r.best_size, 26);
  expect_valid_witness(r, Params(6, 1, 2));
}

TEST(Search, CompressionWindow) {
  EXPECT_EQ(compression_window(Params(6, 2, 2)), std::make_pair(3, 6));
  SearchSpec spec{Params(6, 2, 2)};
  spec.use_compression = true;
  const auto r = max_family(spec);
  EXPECT_EQ(r.best_size, 21);
  EXPECT_TRUE(r.window_transfers);
  SearchSpec odd{Params(5, 2, 2)};
  odd.use_compression = true;
  EXPECT_FALSE(max_family(odd).window_transfers);
  SearchSpec both{Params(6, 2, 2)};
  both.use_compression = true;
  both.layer_window = std::make_pair(3, 4);
  EXPECT_THROW(max_family(both), PreconditionError);
}

TEST(Search, BudgetExceededIsReported) {
  SearchSpec spec{Params(7, 1, 2)};
  spec.pruning = Pruning::count_only;
  spec.budget.nodes = 10;
  const auto r = max_family(spec);
  EXPECT_TRUE(r.budget_exceeded);
  EXPECT_FALSE(r.proven_optimal);
  expect_valid_witness(r, Params(7, 1, 2));
}

TEST(Search, JsonFields) {
  SearchSpec spec{Params(5, 2, 2)};
  const auto j = search_result_to_json(spec, max_family(spec));
  EXPECT_EQ(j.at("best_size"), 9);
  EXPECT_TRUE(j.contains("witness"));
  EXPECT_TRUE(j.contains("nodes"));
}

TEST(Constructions, SmallExamples) {
  const Params p(5, 2, 2);
  const Family a = construct_A(p), b = construct_B(p);
  EXPECT_EQ(a.size(), 9u);
  EXPECT_EQ(b.size(), 8u);
  for (const Family* f : {&a, &b}) {
    EXPECT_TRUE(is_t_intersecting(*f, 2));
    EXPECT_TRUE(is_k_sperner(*f, 2));
  }
  EXPECT_EQ(construct_layers(Params(6, 2, 2)).size(), 21u);
}

TEST(Constructions, CountsMatchMaterialized) {
  for (int n = 2; n <= 12; ++n)
    for (int t = 1; t <= 4 && t <= n; ++t)
      for (int k = 1; k <= 3; ++k) {
        const Params p(n, t, k);
        if (p.even_case()) {
          const Family l = construct_layers(p);
          EXPECT_EQ(BigInt(l.size()), even_case_bound(p));
          EXPECT_TRUE(is_t_intersecting(l, t));
          EXPECT_TRUE(is_k_sperner(l, k));
          continue;
        }
        const Family a = construct_A(p), b = construct_B(p);
        ASSERT_EQ(BigInt(a.size()), count_A(p)) << n << " " << t << " " << k;
        ASSERT_EQ(BigInt(b.size()), count_B(p)) << n << " " << t << " " << k;
        EXPECT_EQ(count_B(p), odd_case_closed_form(p));
        EXPECT_TRUE(is_t_intersecting(a, t) && is_k_sperner(a, k));
        EXPECT_TRUE(is_t_intersecting(b, t) && is_k_sperner(b, k));
      }
}

TEST(Constructions, BBeatsAEventually) {
  for (int t = 1; t <= 3; ++t)
    for (int k = 2; k <= 3; ++k) {
      const auto from = b_beats_a_from(t, k, 60);
      ASSERT_TRUE(from.has_value()) << t << " " << k;
      for (int n = *from; n <= 60; ++n)
        if ((n + t) % 2 == 1) { EXPECT_GT(count_B(Params(n, t, k)), count_A(Params(n, t, k))); }
    }
}

TEST(Bounds, ClassicalValues) {
  EXPECT_EQ(sperner_bound(4), 6);
  EXPECT_EQ(erdos_bound(5, 2), 20);
  EXPECT_EQ(milner_bound(5, 1), 10);
  EXPECT_EQ(frankl_bound(6, 2), 26);
  EXPECT_EQ(even_case_bound(Params(6, 2, 2)), 21);
  const auto table = bounds_table(Params(5, 2, 2));
  ASSERT_NE(table.find("construction_A"), nullptr);
  EXPECT_EQ(table.find("construction_A")->value, 9);
  EXPECT_EQ(table.find("construction_B")->value, 8);
  EXPECT_EQ(table.find("no_such_bound"), nullptr);
}

TEST(Bounds, SearchNeverExceedsBounds) {
  for (int n = 2; n <= 6; ++n)
    for (int t = 1; t <= 2 && t <= n; ++t)
      for (int k = 1; k <= 2; ++k) {
        const Params p(n, t, k);
        const auto best = BigInt(run(n, t, k).best_size);
        EXPECT_LE(best, erdos_bound(n, k));
        if (k == 1) { EXPECT_EQ(best, milner_bound(n, t)) << n << " " << t; }
        if (t == 1) { EXPECT_EQ(best, frankl_bound(n, k)) << n << " " << k; }
        if (p.even_case()) { EXPECT_EQ(best, even_case_bound(p)) << n << " " << t << " " << k; }
      }
}

TEST(GFunction, MatchesBruteForce) {
  const auto r = g_function(Params(5, 2, 2));
  EXPECT_EQ(r.value, 3);
  EXPECT_TRUE(r.proven_optimal);
  EXPECT_GE(r.value, 0);
  for (int n = 3; n <= 7; ++n)
    for (int t = 1; t <= 3 && t <= n; ++t)
      for (int k = 1; k <= 2; ++k) {
        if ((n + t) % 2 == 0) continue;
        const int layer = (n + t - 1) / 2;
        if (layer + k > n) continue;
        const auto g = g_function(Params(n, t, k));
        ASSERT_EQ(g.value, brute_g(n, t, layer, layer + k)) << n << " " << t << " " << k;
        EXPECT_EQ(g_objective(g.witness, layer + k), g.value);
      }
  EXPECT_THROW(g_function(Params(6, 2, 2)), PreconditionError);
}

TEST(GFunction, BCoreObjective) {
  const Params p(5, 2, 2);
  const Family core = Family::from_sets(5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}});
  EXPECT_EQ(g_objective(core, 5), 2);
}
