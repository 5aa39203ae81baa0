#pragma once

#include <optional>

#include "spernerlab/cycle.hpp"
#include "spernerlab/generators.hpp"

namespace spernerlab {

/// Smallest n (with n + t even) for which every chain can hold k consecutive
/// intervals starting anywhere in [middle - m, middle + m].
int min_cycle_n(int t, int k, int m);

/// Random sigma-k-Sperner t-intersecting interval family on the identity
/// order with sizes in [middle - m, middle + k - 1 + m] and at least one
/// member of size middle - m. Chain bottoms are drawn in the band and raised
/// greedily until they t-intersect the bottoms already placed; each chain then
/// receives up to k - 1 further lengths above its bottom, gaps allowed, and
/// some chains are left short or empty. Requires n >= min_cycle_n(t, k, m).
IntervalFamily random_sigma_family(const Params& params, int m, Rng& rng);

struct CycleInstance {
  IntervalFamily raw;
  IntervalFamily consecutive;
  IntervalFamily full;
  int m = 0;
};

/// Draws random_sigma_family instances and completes them with
/// make_consecutive / fill_full until the completed family has band
/// half-width exactly m. Returns nullopt after max_tries failures.
std::optional<CycleInstance> random_full_consecutive(const Params& params, int m, Rng& rng, int max_tries = 64);

}  // namespace spernerlab
