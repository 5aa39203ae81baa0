#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "spernerlab/binomial.hpp"
#include "spernerlab/family.hpp"
#include "spernerlab/params.hpp"

namespace spernerlab {

/// Largest cycle length handled by interval machinery (positions fit a Mask).
inline constexpr int kMaxCycleN = 63;

/// A cyclic order of [n]: position p (mod n) holds element order[p].
class CyclicPerm {
 public:
  /// `order` must be a permutation of 1..n with n <= kMaxCycleN.
  explicit CyclicPerm(std::vector<int> order);
  static CyclicPerm identity(int n);

  int n() const { return static_cast<int>(order_.size()); }
  int element_at(int position) const;
  int position_of(int element) const { return pos_[static_cast<std::size_t>(element - 1)]; }
  const std::vector<int>& order() const { return order_; }

  friend bool operator==(const CyclicPerm& a, const CyclicPerm& b) { return a.order_ == b.order_; }

 private:
  std::vector<int> order_;
  std::vector<int> pos_;
};

/// One representative per cyclic class, element 1 fixed at position 0, in
/// lexicographic order of the remaining positions. (n - 1)! orders.
std::vector<CyclicPerm> cyclic_orders(int n);

/// Consecutive positions start, start + 1, ..., start + len - 1 (mod n).
struct Interval {
  int start = 0;
  int len = 1;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Bit p set iff position p lies in the interval.
Mask positions_of(const Interval& iv, int n);

/// A family of intervals of one cyclic order, deduplicated and sorted by
/// (start, len) so each chain C_h is a contiguous run.
class IntervalFamily {
 public:
  IntervalFamily(CyclicPerm perm, std::vector<Interval> members);
  explicit IntervalFamily(int n, std::vector<Interval> members = {});

  int n() const { return perm_.n(); }
  const CyclicPerm& perm() const { return perm_; }
  const std::vector<Interval>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const Interval& iv) const;

  /// Lengths of the members in chain C_h, ascending.
  std::vector<int> chain_lengths(int h) const;
  /// Element mask of a member under the stored order.
  Mask elements(const Interval& iv) const;
  int min_len() const;
  int max_len() const;

  std::string str() const;

  friend bool operator==(const IntervalFamily&, const IntervalFamily&) = default;

 private:
  CyclicPerm perm_;
  std::vector<Interval> members_;
};

struct RestrictResult {
  IntervalFamily intervals;
  /// Members equal to [n]; they are consecutive but belong to no chain.
  std::size_t full_members = 0;
  std::size_t empty_members = 0;
};

/// Members of fam whose elements are consecutive in sigma.
RestrictResult restrict_to_cycle(const Family& fam, const CyclicPerm& sigma);

/// C_h: the n - 1 nested intervals starting at position h, lengths 1..n-1.
std::vector<Interval> chain(const CyclicPerm& sigma, int h);

bool is_t_intersecting(const IntervalFamily& g, int t);
/// t-intersecting and at most k members on every chain.
bool is_sigma_ks_ti(const IntervalFamily& g, const Params& params);
/// Every chain's members have consecutive lengths.
bool is_consecutive(const IntervalFamily& g);
/// Consecutive with exactly k members on every chain.
bool is_full_consecutive(const IntervalFamily& g, int k);

BigInt weight(const IntervalFamily& g);

/// The (len - 1)-intervals inside members of length len >= 2: each member
/// contributes its two maximal proper subintervals.
IntervalFamily interval_shadow(const IntervalFamily& g);

struct ConsecutiveResult {
  IntervalFamily family;
  int replacements = 0;
};

/// Closes gaps inside each chain: a missing length g strictly between the
/// chain's shortest and longest member replaces the longest when g >= n/2 and
/// the shortest otherwise. Smallest gap first. Requires a sigma-k-Sperner
/// t-intersecting input.
ConsecutiveResult make_consecutive(const IntervalFamily& g, const Params& params);

/// Smallest m >= 0 with all member sizes in [middle - m, middle + k - 1 + m].
int band_half_width(const IntervalFamily& g, const Params& params);

/// make_consecutive, then tops every chain up to k members: the interval one
/// longer than the chain's longest, or, for a chain whose run starts above
/// middle + m (or is empty), intervals of length >= middle + m which
/// t-intersect everything in the band. Requires sizes within the band for
/// some m <= k - 1.
IntervalFamily fill_full(const IntervalFamily& g, const Params& params);

/// The complement of iv extended by floor(t/2) positions at its start and
/// ceil(t/2) at its end: size n + t - len. Requires len >= t and
/// n + t - len <= n - 1.
Interval bar_complement(const Interval& iv, int n, int t);
inline Interval bar_complement(const Interval& iv, const CyclicPerm& sigma, int t) {
  return bar_complement(iv, sigma.n(), t);
}

struct ComplementLemmaReport {
  bool holds = true;
  std::size_t checked = 0;
  /// First failure, empty when holds.
  std::string witness;
};

/// For every member G: no proper subinterval of bar(G) is a member, and
/// bar(G) is a member whenever |G| = middle - m.
ComplementLemmaReport check_complement_lemma(const IntervalFamily& g, const Params& params);

/// Counts g_i of members of length middle + i, for i = -m .. k + m - 1.
struct GProfile {
  int n = 0;
  int t = 0;
  int k = 0;
  int m = 0;
  std::vector<std::int64_t> counts;

  /// g_i; zero outside [-m, k + m - 1].
  std::int64_t at(int i) const;
  /// sum of g_i for lo <= i <= hi.
  std::int64_t sum(int lo, int hi) const;
  std::int64_t total() const;
};

/// Throws PreconditionError if a member lies outside the band.
GProfile g_profile(const IntervalFamily& g, const Params& params);

struct InequalityCheck {
  int clause = 0;  // 1..4
  int j = 0;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds = true;
};

/// Clauses (1)-(4) on a raw profile, for every applicable j.
std::vector<InequalityCheck> evaluate_inequalities(const GProfile& g);

/// Missing-interval families H_1^j (members of no chain that contain no
/// member) and H_2^j (contained in no member), sizes middle .. middle + j.
struct MissingFamilyCheck {
  int clause = 0;  // 2 or 3
  int j = 0;       // the clause's j; the families are built at level `level`
  int level = 0;
  std::size_t h1 = 0;
  std::size_t h2 = 0;
  /// Missing intervals in the level range that contain a member.
  std::size_t above = 0;
  std::int64_t h1_floor = 0;
  /// Lower bound on `above` from chains of short members.
  std::int64_t above_floor = 0;
  bool disjoint = true;
  bool holds = true;
};

struct InequalityReport {
  GProfile profile;
  std::vector<InequalityCheck> inequalities;
  std::vector<MissingFamilyCheck> missing;
  bool all_hold() const;
};

/// Requires n + t even, a full consecutive sigma-k-Sperner t-intersecting
/// family with min size middle - m, max <= middle + k - 1 + m, m < k.
InequalityReport check_inequalities(const IntervalFamily& g, const Params& params);

struct ExactComparison {
  bool holds = false;
  BigInt lhs;
  BigInt rhs;
};

/// w(G) <= n * sum_{i<k} C(n, middle + i). Requires n + t even.
ExactComparison check_weight_bound(const IntervalFamily& g, const Params& params);

/// n * sum_{i<k} C(n, (n + t)/2 + i).
BigInt cycle_weight_bound(const Params& params);

/// sum over cyclic orders of w(fam_sigma) against n! * |fam| (members of size
/// 0 or n are excluded on both sides). Requires n <= 7.
ExactComparison averaging_identity(const Family& fam);

}  // namespace spernerlab
