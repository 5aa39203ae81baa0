#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "spernerlab/binomial.hpp"

namespace spernerlab {

/// A subset of [n] as a bit word: bit i - 1 is set iff element i belongs.
using Mask = std::uint64_t;

inline int cardinality(Mask m) { return std::popcount(m); }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline bool is_proper_subset(Mask a, Mask b) { return a != b && is_subset(a, b); }

/// Canonical order: by cardinality, then by numeric value.
inline bool canonical_less(Mask a, Mask b) {
  const int ca = cardinality(a);
  const int cb = cardinality(b);
  return ca != cb ? ca < cb : a < b;
}

/// Mask from 1-based elements.
Mask mask_of(std::span<const int> elements);
inline Mask mask_of(std::initializer_list<int> elements) {
  return mask_of(std::span<const int>(elements.begin(), elements.size()));
}
/// 1-based elements of m in ascending order.
std::vector<int> elements_of(Mask m);

/// Calls fn(sub) for every r-element subset of m, in increasing numeric order.
template <typename Fn>
void for_each_subset_of_size(Mask m, int r, Fn&& fn) {
  const int s = cardinality(m);
  if (r < 0 || r > s) return;
  if (r == 0) {
    fn(Mask{0});
    return;
  }
  Mask bits[64];
  int idx = 0;
  for (Mask rest = m; rest; rest &= rest - 1) bits[idx++] = rest & -rest;
  // Gosper's hack over the s positions of m.
  std::uint64_t pick = (std::uint64_t{1} << r) - 1;
  const std::uint64_t limit = s == 64 ? 0 : (std::uint64_t{1} << s);
  while (limit == 0 || pick < limit) {
    Mask sub = 0;
    for (std::uint64_t p = pick; p; p &= p - 1) sub |= bits[std::countr_zero(p)];
    fn(sub);
    const std::uint64_t low = pick & -pick;
    const std::uint64_t ripple = pick + low;
    if (ripple == 0) break;
    pick = ripple | (((pick ^ ripple) >> 2) / low);
  }
}

/// A family of subsets of [n], stored deduplicated in canonical order so each
/// layer is a contiguous slice. Immutable after construction.
class Family {
 public:
  /// Empty family over [n]. Requires 1 <= n <= kMaxEnumerationN.
  explicit Family(int n);
  /// Canonicalizes (sorts, deduplicates) members. Throws PreconditionError if
  /// a member has a bit at position >= n.
  Family(int n, std::vector<Mask> members);

  static Family from_sets(int n, const std::vector<std::vector<int>>& sets);
  /// All `size`-subsets of [n].
  static Family full_layer(int n, int size);
  /// Union of full layers lo..hi.
  static Family layers(int n, int lo, int hi);

  int n() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const Mask> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Members of cardinality i, as a view into the canonical list.
  std::span<const Mask> layer(int i) const;
  /// f_0 .. f_n.
  std::vector<std::size_t> layer_profile() const;
  bool contains(Mask m) const;
  /// Smallest / largest member cardinality; -1 for the empty family.
  int min_size() const;
  int max_size() const;
  bool is_uniform() const;

  Family with(std::span<const Mask> extra) const;
  Family without(std::span<const Mask> removed) const;

  std::string str() const;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  int n_;
  std::vector<Mask> members_;
};

/// Every unordered pair of members meets in at least t elements. Vacuous for
/// families with fewer than two members.
bool is_t_intersecting(const Family& fam, int t);
bool is_t_intersecting(std::span<const Mask> members, int t);

/// Number of sets in the longest strictly increasing chain; 0 when empty.
int longest_chain(const Family& fam);
inline bool is_k_sperner(const Family& fam, int k) { return longest_chain(fam) <= k; }

/// Height of each member (canonical order): the length of the longest chain
/// of members ending at it. Minimal members have height 1.
std::vector<int> chain_heights(const Family& fam);

/// All level-subsets of members of size >= level.
Family shadow(const Family& fam, int level);
/// All level-supersets of members of size <= level.
Family shade(const Family& fam, int level);

Family complement_family(const Family& fam);

/// Sum over members of C(n, |G|).
BigInt weight(const Family& fam);

struct KatonaShadowReport {
  bool holds = false;
  std::size_t shadow_size = 0;
  /// |shadow| and C(2r - t, l) / C(2r - t, r) * |fam|, exact.
  Rational lhs;
  Rational rhs;
};

/// Checks the shadow lower bound for an r-uniform t-intersecting family at
/// level l, r - t <= l <= r. Throws PreconditionError naming the violated
/// hypothesis otherwise.
KatonaShadowReport verify_katona_shadow(const Family& fam, int r, int t, int level);

}  // namespace spernerlab
