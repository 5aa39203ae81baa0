#include "spernerlab/constructions.hpp"

#include "spernerlab/errors.hpp"

namespace spernerlab {

namespace {

int odd_base(const Params& params) { return (params.n() + params.t() - 1) / 2; }

}  // namespace

Family construct_layers(const Params& params) {
  params.require_even("construct_layers");
  params.require_enumerable("construct_layers");
  const int lo = params.middle();
  return Family::layers(params.n(), lo, lo + params.k() - 1);
}

Family construct_A(const Params& params) {
  params.require_odd("construct_A");
  params.require_enumerable("construct_A");
  const int n = params.n();
  const int base = odd_base(params);
  const Mask last = Mask{1} << (n - 1);
  std::vector<Mask> out;
  for_each_subset_of_size(full_mask(n), base, [&](Mask m) {
    if (!(m & last)) out.push_back(m);
  });
  const Family upper = Family::layers(n, base + 1, base + params.k() - 1);
  out.insert(out.end(), upper.begin(), upper.end());
  return Family(n, std::move(out));
}

Family construct_B(const Params& params) {
  params.require_odd("construct_B");
  params.require_enumerable("construct_B");
  const int n = params.n();
  const int base = odd_base(params);
  const Mask core = full_mask(params.t());
  std::vector<Mask> out;
  for_each_subset_of_size(full_mask(n), base, [&](Mask m) {
    if (is_subset(core, m)) out.push_back(m);
  });
  const Family middle = Family::layers(n, base + 1, base + params.k() - 1);
  out.insert(out.end(), middle.begin(), middle.end());
  if (base + params.k() <= n) {
    for_each_subset_of_size(full_mask(n), base + params.k(), [&](Mask m) {
      if (!is_subset(core, m)) out.push_back(m);
    });
  }
  return Family(n, std::move(out));
}

BigInt count_A(const Params& params) {
  params.require_odd("count_A");
  const int n = params.n();
  const int base = odd_base(params);
  // Layer-base sets split by whether they contain n; keep those that do not.
  BigInt total = binomial(n - 1, base);
  for (int s = base + 1; s <= base + params.k() - 1; ++s) total += binomial(n - 1, s) + binomial(n - 1, s - 1);
  return total;
}

BigInt count_B(const Params& params) {
  params.require_odd("count_B");
  const int n = params.n();
  const int t = params.t();
  const int base = odd_base(params);
  // Classify a set of size s by j = |F cap [1, t]|: C(t, j) C(n - t, s - j) sets.
  auto with_core = [&](int s, bool full_core) {
    BigInt c = 0;
    for (int j = 0; j <= t; ++j) {
      if ((j == t) == full_core) c += binomial(t, j) * binomial(n - t, s - j);
    }
    return c;
  };
  BigInt total = with_core(base, true);
  for (int s = base + 1; s <= base + params.k() - 1; ++s) total += with_core(s, true) + with_core(s, false);
  total += with_core(base + params.k(), false);
  return total;
}

std::optional<int> b_beats_a_from(int t, int k, int n_max) {
  std::optional<int> from;
  for (int n = n_max; n > t; --n) {
    if ((n + t) % 2 == 0) continue;
    const Params p(n, t, k);
    if (count_B(p) > count_A(p))
      from = n;
    else
      break;
  }
  return from;
}

}  // namespace spernerlab
