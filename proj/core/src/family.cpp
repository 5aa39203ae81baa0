#include "spernerlab/family.hpp"

#include <algorithm>
#include <sstream>

#include "spernerlab/errors.hpp"
#include "spernerlab/params.hpp"

namespace spernerlab {

Mask mask_of(std::span<const int> elements) {
  Mask m = 0;
  for (int e : elements) {
    if (e < 1 || e > 64) throw PreconditionError("mask_of: element " + std::to_string(e) + " out of range");
    m |= Mask{1} << (e - 1);
  }
  return m;
}

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality(m)));
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

namespace {

void check_ground(int n) {
  if (n < 1 || n > kMaxEnumerationN)
    throw PreconditionError("Family: n must lie in [1, " + std::to_string(kMaxEnumerationN) + "], got " +
                            std::to_string(n));
}

}  // namespace

Family::Family(int n) : n_(n) { check_ground(n); }

Family::Family(int n, std::vector<Mask> members) : n_(n), members_(std::move(members)) {
  check_ground(n);
  const Mask outside = ~full_mask(n);
  for (Mask m : members_) {
    if (m & outside) throw PreconditionError("Family: member has an element beyond n=" + std::to_string(n));
  }
  std::sort(members_.begin(), members_.end(), canonical_less);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Family Family::from_sets(int n, const std::vector<std::vector<int>>& sets) {
  std::vector<Mask> masks;
  masks.reserve(sets.size());
  for (const auto& s : sets) {
    for (int e : s) {
      if (e < 1 || e > n)
        throw PreconditionError("Family: element " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
    }
    masks.push_back(mask_of(s));
  }
  return Family(n, std::move(masks));
}

Family Family::full_layer(int n, int size) { return layers(n, size, size); }

Family Family::layers(int n, int lo, int hi) {
  check_ground(n);
  std::vector<Mask> masks;
  for (int s = std::max(lo, 0); s <= std::min(hi, n); ++s) {
    for_each_subset_of_size(full_mask(n), s, [&](Mask m) { masks.push_back(m); });
  }
  return Family(n, std::move(masks));
}

std::span<const Mask> Family::layer(int i) const {
  auto lo = std::partition_point(members_.begin(), members_.end(), [i](Mask m) { return cardinality(m) < i; });
  auto hi = std::partition_point(lo, members_.end(), [i](Mask m) { return cardinality(m) <= i; });
  return {lo, hi};
}

std::vector<std::size_t> Family::layer_profile() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(n_) + 1, 0);
  for (Mask m : members_) ++f[static_cast<std::size_t>(cardinality(m))];
  return f;
}

bool Family::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m, canonical_less);
}

int Family::min_size() const { return members_.empty() ? -1 : cardinality(members_.front()); }
int Family::max_size() const { return members_.empty() ? -1 : cardinality(members_.back()); }
bool Family::is_uniform() const { return members_.empty() || min_size() == max_size(); }

Family Family::with(std::span<const Mask> extra) const {
  std::vector<Mask> all(members_);
  all.insert(all.end(), extra.begin(), extra.end());
  return Family(n_, std::move(all));
}

Family Family::without(std::span<const Mask> removed) const {
  std::vector<Mask> sorted(removed.begin(), removed.end());
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  std::vector<Mask> out;
  out.reserve(members_.size());
  std::set_difference(members_.begin(), members_.end(), sorted.begin(), sorted.end(), std::back_inserter(out),
                      canonical_less);
  return Family(n_, std::move(out));
}

std::string Family::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (Mask m : members_) {
    os << (first ? "" : ",") << "{";
    bool fe = true;
    for (int e : elements_of(m)) {
      os << (fe ? "" : ",") << e;
      fe = false;
    }
    os << "}";
    first = false;
  }
  os << "}";
  return os.str();
}

bool is_t_intersecting(std::span<const Mask> members, int t) {
  if (t <= 0) return true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (cardinality(members[i] & members[j]) < t) return false;
    }
  }
  return true;
}

bool is_t_intersecting(const Family& fam, int t) { return is_t_intersecting(fam.members(), t); }

std::vector<int> chain_heights(const Family& fam) {
  // Canonical order lists every proper subset before its supersets.
  const auto members = fam.members();
  std::vector<int> height(members.size(), 1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (is_proper_subset(members[j], members[i])) height[i] = std::max(height[i], height[j] + 1);
    }
  }
  return height;
}

int longest_chain(const Family& fam) {
  const auto h = chain_heights(fam);
  return h.empty() ? 0 : *std::max_element(h.begin(), h.end());
}

Family shadow(const Family& fam, int level) {
  std::vector<Mask> out;
  for (Mask m : fam) {
    if (cardinality(m) >= level) for_each_subset_of_size(m, level, [&](Mask s) { out.push_back(s); });
  }
  return Family(fam.n(), std::move(out));
}

Family shade(const Family& fam, int level) {
  const Mask all = full_mask(fam.n());
  std::vector<Mask> out;
  for (Mask m : fam) {
    const int c = cardinality(m);
    if (c <= level) for_each_subset_of_size(all & ~m, level - c, [&](Mask s) { out.push_back(m | s); });
  }
  return Family(fam.n(), std::move(out));
}

Family complement_family(const Family& fam) {
  const Mask all = full_mask(fam.n());
  std::vector<Mask> out;
  out.reserve(fam.size());
  for (Mask m : fam) out.push_back(all & ~m);
  return Family(fam.n(), std::move(out));
}

BigInt weight(const Family& fam) {
  const auto row = binomial_row(fam.n());
  const auto f = fam.layer_profile();
  BigInt total = 0;
  for (std::size_t i = 0; i < f.size(); ++i) total += row[i] * f[i];
  return total;
}

KatonaShadowReport verify_katona_shadow(const Family& fam, int r, int t, int level) {
  for (Mask m : fam) {
    if (cardinality(m) != r)
      throw PreconditionError("verify_katona_shadow: family is not " + std::to_string(r) + "-uniform");
  }
  if (t < 1 || t > r)
    throw PreconditionError("verify_katona_shadow: requires 1 <= t <= r, got t=" + std::to_string(t));
  if (!is_t_intersecting(fam, t))
    throw PreconditionError("verify_katona_shadow: family is not " + std::to_string(t) + "-intersecting");
  if (level < r - t || level > r)
    throw PreconditionError("verify_katona_shadow: level must lie in [r - t, r], got " + std::to_string(level));

  KatonaShadowReport rep;
  rep.shadow_size = shadow(fam, level).size();
  rep.lhs = Rational(BigInt(rep.shadow_size));
  rep.rhs = Rational(binomial(2 * r - t, level), binomial(2 * r - t, r)) * BigInt(fam.size());
  rep.holds = rep.lhs >= rep.rhs;
  return rep;
}

}  // namespace spernerlab
