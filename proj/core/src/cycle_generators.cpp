#include "spernerlab/cycle_generators.hpp"

#include <algorithm>
#include <numeric>

#include "spernerlab/errors.hpp"

namespace spernerlab {

int min_cycle_n(int t, int k, int m) {
  int n = std::max(t + 2 * m + 2 * k, 3);
  if ((n + t) % 2) ++n;
  return n;
}

IntervalFamily random_sigma_family(const Params& params, int m, Rng& rng) {
  const int n = params.n();
  const int t = params.t();
  const int k = params.k();
  if (n > kMaxCycleN) throw PreconditionError("random_sigma_family: n exceeds the cycle limit");
  if (m < 0 || m > k - 1) throw PreconditionError("random_sigma_family: m must lie in [0, k - 1]");
  if (n < min_cycle_n(t, k, m))
    throw PreconditionError("random_sigma_family: n=" + std::to_string(n) + " below " +
                            std::to_string(min_cycle_n(t, k, m)) + " for " + params.str() + " m=" + std::to_string(m));
  const int lo = params.middle() - m;
  const int hi_bottom = params.middle() + m;
  const int top = params.middle() + k - 1 + m;

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  shuffle(rng, order);

  const double empty_rate = static_cast<double>(uniform_int(rng, 0, 3)) / 20.0;
  std::vector<Mask> bottoms;
  std::vector<Interval> members;
  bool anchored = false;
  for (int h : order) {
    if (anchored && coin(rng, empty_rate)) continue;
    // Low bottoms are the interesting ones; skew the draw toward lo.
    const auto span = hi_bottom - lo;
    int a = anchored ? lo + static_cast<int>(uniform_int(rng, 0, span) * uniform_int(rng, 0, span) / std::max(span, 1))
                     : lo;
    for (;; ++a) {
      const Mask p = positions_of({h, a}, n);
      const bool ok = std::all_of(bottoms.begin(), bottoms.end(), [&](Mask q) { return cardinality(p & q) >= t; });
      if (ok || a >= hi_bottom) {
        if (!ok) throw BugTrap("random_sigma_family: a bottom of length middle + m failed to t-intersect");
        break;
      }
    }
    anchored = true;
    bottoms.push_back(positions_of({h, a}, n));
    members.push_back({h, a});
    std::vector<int> above;
    for (int len = a + 1; len <= top; ++len) above.push_back(len);
    shuffle(rng, above);
    const auto extra = std::min<std::int64_t>(uniform_int(rng, 0, k - 1), static_cast<std::int64_t>(above.size()));
    for (std::int64_t i = 0; i < extra; ++i) members.push_back({h, above[static_cast<std::size_t>(i)]});
  }
  return IntervalFamily(n, std::move(members));
}

std::optional<CycleInstance> random_full_consecutive(const Params& params, int m, Rng& rng, int max_tries) {
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    IntervalFamily raw = random_sigma_family(params, m, rng);
    IntervalFamily cons = make_consecutive(raw, params).family;
    IntervalFamily full = fill_full(raw, params);
    if (std::max(0, params.middle() - full.min_len()) != m) continue;
    return CycleInstance{std::move(raw), std::move(cons), std::move(full), m};
  }
  return std::nullopt;
}

}  // namespace spernerlab
