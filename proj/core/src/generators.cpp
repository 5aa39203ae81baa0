#include "spernerlab/generators.hpp"

#include <algorithm>
#include <limits>

#include "spernerlab/errors.hpp"

namespace spernerlab {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw PreconditionError("uniform_int: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

bool coin(Rng& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

Mask random_subset(Rng& rng, int n, int size) {
  if (size < 0 || size > n) throw PreconditionError("random_subset: size outside [0, n]");
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  Mask m = 0;
  for (int i = 0; i < size; ++i) {
    const auto j = static_cast<std::size_t>(uniform_int(rng, i, n - 1));
    std::swap(idx[static_cast<std::size_t>(i)], idx[j]);
    m |= Mask{1} << idx[static_cast<std::size_t>(i)];
  }
  return m;
}

Family greedy_valid_family(int n, std::span<const Mask> candidates, int t, int k) {
  struct Kept {
    Mask mask;
    int up;    // longest chain of kept sets with this set on top
    int down;  // longest chain of kept sets with this set at the bottom
  };
  std::vector<Kept> kept;
  for (Mask c : candidates) {
    bool ok = true;
    int up = 1, down = 1;
    for (const auto& s : kept) {
      if (s.mask == c || cardinality(s.mask & c) < t) {
        ok = false;
        break;
      }
      if (is_proper_subset(s.mask, c)) up = std::max(up, s.up + 1);
      if (is_proper_subset(c, s.mask)) down = std::max(down, s.down + 1);
    }
    if (!ok || up + down - 1 > k) continue;
    kept.push_back({c, up, down});
    // Refresh chain lengths through the new member.
    std::sort(kept.begin(), kept.end(), [](const Kept& a, const Kept& b) { return canonical_less(a.mask, b.mask); });
    for (auto& s : kept) s.up = 1;
    for (std::size_t i = 0; i < kept.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (is_proper_subset(kept[j].mask, kept[i].mask)) kept[i].up = std::max(kept[i].up, kept[j].up + 1);
    for (auto& s : kept) s.down = 1;
    for (std::size_t i = kept.size(); i-- > 0;)
      for (std::size_t j = i + 1; j < kept.size(); ++j)
        if (is_proper_subset(kept[i].mask, kept[j].mask)) kept[i].down = std::max(kept[i].down, kept[j].down + 1);
  }
  std::vector<Mask> out;
  out.reserve(kept.size());
  for (const auto& s : kept) out.push_back(s.mask);
  return Family(n, std::move(out));
}

Family random_valid_family(const Params& params, Rng& rng) {
  params.require_enumerable("random_valid_family");
  const int n = params.n();
  const int t = params.t();
  const Mask core = random_subset(rng, n, t);
  const Mask rest = full_mask(n) & ~core;
  const auto draws = uniform_int(rng, n, 6 * n);
  // Lowest size a core superset is drawn at; keeping some draws low exercises
  // the up-compression rounds.
  const auto low = uniform_int(rng, t, std::max(t, params.middle()));
  std::vector<Mask> candidates;
  candidates.reserve(static_cast<std::size_t>(draws));
  for (std::int64_t i = 0; i < draws; ++i) {
    if (coin(rng, 0.6)) {
      const auto size = uniform_int(rng, low, n);
      Mask extra = 0;
      const int need = static_cast<int>(size) - t;
      if (need > 0) {
        const Mask pick = random_subset(rng, n - t, need);
        // Spread the picked low bits over the elements outside the core.
        int bit = 0;
        for (Mask r = rest; r; r &= r - 1, ++bit)
          if (pick & (Mask{1} << bit)) extra |= r & -r;
      }
      candidates.push_back(core | extra);
    } else {
      candidates.push_back(random_subset(rng, n, static_cast<int>(uniform_int(rng, t, n))));
    }
  }
  return greedy_valid_family(n, candidates, t, params.k());
}

Family random_antichain_above_middle(int n, Rng& rng) {
  const int lo = n / 2 + 1;
  if (lo > n) return Family(n);
  std::vector<Mask> candidates;
  const auto draws = uniform_int(rng, 1, 4 * n);
  for (std::int64_t i = 0; i < draws; ++i)
    candidates.push_back(random_subset(rng, n, static_cast<int>(uniform_int(rng, lo, n))));
  return greedy_valid_family(n, candidates, 0, 1);
}

Family random_uniform_t_intersecting(int n, int r, int t, Rng& rng) {
  if (r < t || r > n) throw PreconditionError("random_uniform_t_intersecting: need t <= r <= n");
  const Mask core = random_subset(rng, n, t);
  const Mask rest = full_mask(n) & ~core;
  std::vector<Mask> candidates;
  const auto draws = uniform_int(rng, 1, 5 * n);
  const double core_bias = static_cast<double>(uniform_int(rng, 0, 10)) / 10.0;
  for (std::int64_t i = 0; i < draws; ++i) {
    if (coin(rng, core_bias)) {
      const Mask pick = random_subset(rng, n - t, r - t);
      Mask extra = 0;
      int bit = 0;
      for (Mask q = rest; q; q &= q - 1, ++bit)
        if (pick & (Mask{1} << bit)) extra |= q & -q;
      candidates.push_back(core | extra);
    } else {
      candidates.push_back(random_subset(rng, n, r));
    }
  }
  return greedy_valid_family(n, candidates, t, 1);
}

Family random_family(int n, int lo, int hi, Rng& rng, int max_members) {
  std::vector<Mask> out;
  const auto count = uniform_int(rng, 0, max_members);
  for (std::int64_t i = 0; i < count; ++i)
    out.push_back(random_subset(rng, n, static_cast<int>(uniform_int(rng, lo, hi))));
  return Family(n, std::move(out));
}

}  // namespace spernerlab
