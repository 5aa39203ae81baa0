#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "spernerlab/family.hpp"
#include "spernerlab/params.hpp"

namespace spernerlab {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi]. Implemented on the raw engine output so the
/// stream is identical across standard libraries.
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);
bool coin(Rng& rng, double p);

/// Uniformly random subset of [n] with exactly `size` elements.
Mask random_subset(Rng& rng, int n, int size);
/// Fisher-Yates shuffle driven by uniform_int.
template <typename T>
void shuffle(Rng& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(i) - 1))]);
  }
}

/// Offers candidates in order and keeps each one that stays t-intersecting
/// with the kept sets and creates no (k+1)-chain.
Family greedy_valid_family(int n, std::span<const Mask> candidates, int t, int k);

/// A random t-intersecting k-Sperner family. Candidates mix supersets of a
/// random t-element core (across all sizes, so low layers are populated) with
/// unconstrained random sets, then pass through greedy_valid_family.
Family random_valid_family(const Params& params, Rng& rng);

/// Random antichain whose members all have size > n / 2.
Family random_antichain_above_middle(int n, Rng& rng);

/// Random r-uniform t-intersecting family grown from sets that contain a
/// random t-core plus compatible unconstrained r-sets.
Family random_uniform_t_intersecting(int n, int r, int t, Rng& rng);

/// Random family with member sizes drawn from [lo, hi].
Family random_family(int n, int lo, int hi, Rng& rng, int max_members);

}  // namespace spernerlab
