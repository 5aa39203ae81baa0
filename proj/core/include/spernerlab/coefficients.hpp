#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spernerlab/binomial.hpp"
#include "spernerlab/cycle.hpp"
#include "spernerlab/params.hpp"

namespace spernerlab {

enum class Stage { g, gprime, gdoubleprime };
const char* to_string(Stage s);

/// Integer coefficients indexed lo .. lo + values.size() - 1. A g or g'
/// vector spans -m .. k + m - 1; a g'' vector spans 0 .. k.
struct CoeffVector {
  Stage stage = Stage::g;
  int m = 0;
  int k = 0;
  int lo = 0;
  std::vector<std::int64_t> values;

  static CoeffVector from_profile(const GProfile& p);

  int hi() const { return lo + static_cast<int>(values.size()) - 1; }
  /// Zero outside the stored range.
  std::int64_t at(int i) const;
  std::int64_t sum() const;
  std::int64_t sum(int from, int to) const;
};

/// Moves g_{-i} (i >= 2) to index k - 1 + i and sets
/// g'_k = sum_{i=k}^{k+m-1} g_i - sum_{i=2}^m g_{-i}. Throws BugTrap if
/// g'_k < 0 and PreconditionError on negative input entries.
CoeffVector to_gprime(const CoeffVector& g);

/// Shifts the weight of lengths below the middle and above middle + k - 1
/// into indices 0 .. k - 1; g''_k = g'_k - g'_{-1}. Throws BugTrap if
/// g''_k < 0.
CoeffVector to_gdoubleprime(const CoeffVector& gp, const Params& params);

/// sum_i v_i * C(n, (n + t)/2 + i). Requires n + t even.
BigInt weighted_sum(const CoeffVector& v, int n, int t);

struct PrefixBound {
  int j = 0;
  std::int64_t lhs = 0;  // sum_{i=0}^j g''_i
  std::int64_t rhs = 0;  // (j + 1) n
  std::string source;    // which inequality clause supplies the bound
  bool holds = true;
};

/// sum_{i=0}^j g''_i <= (j + 1) n for 0 <= j <= k - 1.
std::vector<PrefixBound> prefix_bounds(const CoeffVector& gpp, int n);

/// Given values v_0..v_k with sum k*n, every prefix sum_{i<=j} v_i <=
/// (j + 1) n for j < k, and d non-increasing: sum v_i d_i <= n sum_{i<k} d_i.
/// Checks the hypotheses and the conclusion directly.
struct FinalBoundCheck {
  bool hypotheses = false;
  bool holds = false;
  BigInt lhs;
  BigInt rhs;
};
FinalBoundCheck final_bound_from_prefixes(std::span<const std::int64_t> values, std::int64_t n,
                                          std::span<const BigInt> d);

/// C(n, h + a) + C(n, h + b) <= C(n, h + a + 1) + C(n, h + b - 1), h = floor(n/2),
/// evaluated with exact binomials. Requires a < b, b > 0.
bool binom_swap(std::int64_t n, int a, int b);
/// Same inequality after dividing through by C(n, h); exact rationals with a
/// handful of small factors, so it stays cheap for n in the tens of thousands.
bool binom_swap_ratio(std::int64_t n, int a, int b);

/// Smallest N <= n_max such that the swap inequality holds for every n in
/// [N, n_max] (n >= 1); nullopt if it fails at n_max.
std::optional<std::int64_t> minimal_n0(int a, int b, std::int64_t n_max);

struct DominanceResult {
  bool holds = false;
  /// sum a_i d_i - sum b_i d_i.
  BigInt difference;
};

/// For non-negative a, b, non-increasing non-negative d with sum a = sum b and
/// suffix sums sum_{i>=j} a_i <= sum_{i>=j} b_i for j >= 2 (1-based):
/// sum a_i d_i >= sum b_i d_i. Throws PreconditionError listing every
/// violated hypothesis.
DominanceResult rearrangement_dominance(std::span<const BigInt> a, std::span<const BigInt> b,
                                        std::span<const BigInt> d);

/// C(n, mid - j) + C(n, mid + k + j - 1) <= C(n, mid + j - 1) + C(n, mid + k - j),
/// mid = (n + t)/2. Requires n + t even and 1 <= j < k.
bool binomial_push(int n, int t, int k, int j);

/// Ground-set size from which binomial_push(n, t, k, j) holds for every
/// 1 <= j <= m and every n of matching parity up to kPushHorizon; beyond it
/// the push holds asymptotically. Memoized.
inline constexpr int kPushHorizon = 1000;
int push_threshold(int t, int k, int m);

/// Every step of the g -> g' -> g'' argument evaluated on one profile.
struct CoefficientChainReport {
  CoeffVector g, gprime, gdoubleprime;
  std::int64_t expected_mass = 0;  // k n
  bool mass_conserved = false;
  bool gprime_k_dominates = false;  // g'_k >= g_{-1}
  bool suffix_dominance = false;    // g' top block suffix sums <= g's
  bool top_block_dominance = false;
  bool binom_pushes = false;  // per-j binomial push inequality for every j with g_{-j} > 0
  /// n >= push_threshold(t, k, m). Below it the push, monotonicity and
  /// weight-bound steps fall outside the large-n hypothesis and are reported
  /// but not required.
  bool large_n = false;
  BigInt w_g, w_gprime, w_gdoubleprime, bound;
  bool monotone = false;  // w_g <= w_gprime <= w_gdoubleprime
  std::vector<PrefixBound> prefixes;
  bool prefixes_hold = false;
  /// sum g''_i C(n, mid + i) <= n sum_{i<k} C(n, mid + i) from the prefix bounds.
  FinalBoundCheck final_bound;
  bool weight_bound = false;  // w_g <= bound
  bool all_hold() const;
  /// Names of the failing steps, "; "-separated; empty when all hold.
  std::string failures() const;
};

/// Requires n + t even and a valid full-consecutive profile (mass k n).
CoefficientChainReport run_coefficient_chain(const GProfile& profile);

}  // namespace spernerlab
