#include "spernerlab/cycle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "spernerlab/errors.hpp"

namespace spernerlab {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

Mask rotate_up(Mask p, int n) {
  // Bit q of the result is bit q - 1 (mod n) of p.
  return ((p << 1) | (p >> (n - 1))) & full_mask(n);
}

void require_cycle_n(int n, const char* op) {
  if (n < 2 || n > kMaxCycleN)
    throw PreconditionError(std::string(op) + ": cycle length must lie in [2, " + std::to_string(kMaxCycleN) +
                            "], got " + std::to_string(n));
}

void require_matching(const IntervalFamily& g, const Params& params, const char* op) {
  if (g.n() != params.n())
    throw PreconditionError(std::string(op) + ": family is on a cycle of length " + std::to_string(g.n()) +
                            " but params are " + params.str());
}

/// Lengths per chain start, each ascending.
std::vector<std::vector<int>> by_chain(const IntervalFamily& g) {
  std::vector<std::vector<int>> chains(static_cast<std::size_t>(g.n()));
  for (const auto& iv : g.members()) chains[static_cast<std::size_t>(iv.start)].push_back(iv.len);
  return chains;
}

IntervalFamily from_chains(const CyclicPerm& perm, const std::vector<std::vector<int>>& chains) {
  std::vector<Interval> out;
  for (std::size_t h = 0; h < chains.size(); ++h)
    for (int len : chains[h]) out.push_back({static_cast<int>(h), len});
  return IntervalFamily(perm, std::move(out));
}

}  // namespace

CyclicPerm::CyclicPerm(std::vector<int> order) : order_(std::move(order)), pos_(order_.size(), -1) {
  const int n = static_cast<int>(order_.size());
  require_cycle_n(n, "CyclicPerm");
  for (int p = 0; p < n; ++p) {
    const int e = order_[static_cast<std::size_t>(p)];
    if (e < 1 || e > n || pos_[static_cast<std::size_t>(e - 1)] != -1)
      throw PreconditionError("CyclicPerm: order is not a permutation of 1..n");
    pos_[static_cast<std::size_t>(e - 1)] = p;
  }
}

CyclicPerm CyclicPerm::identity(int n) {
  std::vector<int> order(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(order.begin(), order.end(), 1);
  return CyclicPerm(std::move(order));
}

int CyclicPerm::element_at(int position) const { return order_[static_cast<std::size_t>(mod(position, n()))]; }

std::vector<CyclicPerm> cyclic_orders(int n) {
  require_cycle_n(n, "cyclic_orders");
  if (n > 10) throw PreconditionError("cyclic_orders: n=" + std::to_string(n) + " is too large to enumerate");
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 2);
  std::vector<CyclicPerm> out;
  do {
    std::vector<int> order{1};
    order.insert(order.end(), rest.begin(), rest.end());
    out.emplace_back(std::move(order));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

Mask positions_of(const Interval& iv, int n) {
  const Mask run = full_mask(iv.len);
  if (iv.start + iv.len <= n) return run << iv.start;
  return ((run << iv.start) | (run >> (n - iv.start))) & full_mask(n);
}

IntervalFamily::IntervalFamily(CyclicPerm perm, std::vector<Interval> members)
    : perm_(std::move(perm)), members_(std::move(members)) {
  const int n = perm_.n();
  for (const auto& iv : members_) {
    if (iv.start < 0 || iv.start >= n || iv.len < 1 || iv.len > n - 1)
      throw PreconditionError("IntervalFamily: interval (start=" + std::to_string(iv.start) +
                              ", len=" + std::to_string(iv.len) + ") invalid for n=" + std::to_string(n));
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

IntervalFamily::IntervalFamily(int n, std::vector<Interval> members)
    : IntervalFamily(CyclicPerm::identity(n), std::move(members)) {}

bool IntervalFamily::contains(const Interval& iv) const {
  return std::binary_search(members_.begin(), members_.end(), iv);
}

std::vector<int> IntervalFamily::chain_lengths(int h) const {
  std::vector<int> out;
  auto lo = std::lower_bound(members_.begin(), members_.end(), Interval{h, 0});
  for (; lo != members_.end() && lo->start == h; ++lo) out.push_back(lo->len);
  return out;
}

Mask IntervalFamily::elements(const Interval& iv) const {
  Mask m = 0;
  for (int i = 0; i < iv.len; ++i) m |= Mask{1} << (perm_.element_at(iv.start + i) - 1);
  return m;
}

int IntervalFamily::min_len() const {
  int best = -1;
  for (const auto& iv : members_) best = best < 0 ? iv.len : std::min(best, iv.len);
  return best;
}

int IntervalFamily::max_len() const {
  int best = -1;
  for (const auto& iv : members_) best = std::max(best, iv.len);
  return best;
}

std::string IntervalFamily::str() const {
  std::ostringstream os;
  os << "n=" << n() << " [";
  for (std::size_t i = 0; i < members_.size(); ++i)
    os << (i ? " " : "") << "(" << members_[i].start << "," << members_[i].len << ")";
  os << "]";
  return os.str();
}

RestrictResult restrict_to_cycle(const Family& fam, const CyclicPerm& sigma) {
  const int n = sigma.n();
  if (fam.n() != n) throw PreconditionError("restrict_to_cycle: ground set and cycle length differ");
  std::vector<Interval> out;
  RestrictResult res{IntervalFamily(sigma, {}), 0, 0};
  for (Mask m : fam) {
    const int size = cardinality(m);
    if (size == 0) {
      ++res.empty_members;
      continue;
    }
    if (size == n) {
      ++res.full_members;
      continue;
    }
    Mask p = 0;
    for (Mask r = m; r; r &= r - 1) p |= Mask{1} << sigma.position_of(std::countr_zero(r) + 1);
    const Mask starts = p & ~rotate_up(p, n);
    if (cardinality(starts) == 1) out.push_back({std::countr_zero(starts), size});
  }
  res.intervals = IntervalFamily(sigma, std::move(out));
  return res;
}

std::vector<Interval> chain(const CyclicPerm& sigma, int h) {
  const int n = sigma.n();
  std::vector<Interval> out;
  for (int len = 1; len <= n - 1; ++len) out.push_back({mod(h, n), len});
  return out;
}

bool is_t_intersecting(const IntervalFamily& g, int t) {
  const int n = g.n();
  std::vector<Mask> pos;
  pos.reserve(g.size());
  for (const auto& iv : g.members()) pos.push_back(positions_of(iv, n));
  return is_t_intersecting(std::span<const Mask>(pos), t);
}

bool is_sigma_ks_ti(const IntervalFamily& g, const Params& params) {
  require_matching(g, params, "is_sigma_ks_ti");
  for (const auto& lens : by_chain(g))
    if (static_cast<int>(lens.size()) > params.k()) return false;
  return is_t_intersecting(g, params.t());
}

bool is_consecutive(const IntervalFamily& g) {
  for (const auto& lens : by_chain(g))
    if (!lens.empty() && lens.back() - lens.front() + 1 != static_cast<int>(lens.size())) return false;
  return true;
}

bool is_full_consecutive(const IntervalFamily& g, int k) {
  for (const auto& lens : by_chain(g))
    if (static_cast<int>(lens.size()) != k) return false;
  return is_consecutive(g);
}

BigInt weight(const IntervalFamily& g) {
  const auto row = binomial_row(g.n());
  BigInt total = 0;
  for (const auto& iv : g.members()) total += row[static_cast<std::size_t>(iv.len)];
  return total;
}

IntervalFamily interval_shadow(const IntervalFamily& g) {
  const int n = g.n();
  std::vector<Interval> out;
  for (const auto& iv : g.members()) {
    if (iv.len < 2) continue;
    out.push_back({iv.start, iv.len - 1});
    out.push_back({(iv.start + 1) % n, iv.len - 1});
  }
  return IntervalFamily(g.perm(), std::move(out));
}

ConsecutiveResult make_consecutive(const IntervalFamily& g, const Params& params) {
  if (!is_sigma_ks_ti(g, params))
    throw PreconditionError("make_consecutive: input is not sigma-" + std::to_string(params.k()) + "-Sperner " +
                            std::to_string(params.t()) + "-intersecting");
  const int n = g.n();
  auto chains = by_chain(g);
  ConsecutiveResult res{g, 0};
  for (auto& lens : chains) {
    // The span back - front strictly shrinks with every replacement.
    int guard = n;
    while (!lens.empty() && lens.back() - lens.front() + 1 > static_cast<int>(lens.size())) {
      if (--guard < 0) throw BugTrap("make_consecutive: replacement loop failed to terminate");
      int gap = lens.front() + 1;
      for (std::size_t i = 1; i < lens.size() && lens[i] == gap; ++i) ++gap;
      if (2 * gap >= n)
        lens.pop_back();
      else
        lens.erase(lens.begin());
      lens.insert(std::lower_bound(lens.begin(), lens.end(), gap), gap);
      ++res.replacements;
    }
  }
  res.family = from_chains(g.perm(), chains);
  if (!is_t_intersecting(res.family, params.t()))
    throw BugTrap("make_consecutive: replacement broke t-intersection");
  return res;
}

int band_half_width(const IntervalFamily& g, const Params& params) {
  if (g.empty()) return 0;
  const int mid = params.middle();
  return std::max({0, mid - g.min_len(), g.max_len() - (mid + params.k() - 1)});
}

IntervalFamily fill_full(const IntervalFamily& g, const Params& params) {
  require_matching(g, params, "fill_full");
  const int m = band_half_width(g, params);
  if (m > params.k() - 1)
    throw PreconditionError("fill_full: member sizes need band half-width " + std::to_string(m) + " > k - 1");
  const int n = g.n();
  const IntervalFamily cons = make_consecutive(g, params).family;
  const int safe = params.middle() + m;
  auto chains = by_chain(cons);
  for (std::size_t h = 0; h < chains.size(); ++h) {
    auto& lens = chains[h];
    while (static_cast<int>(lens.size()) < params.k()) {
      int add;
      if (lens.empty()) {
        add = safe;
      } else if (lens.front() > safe) {
        add = lens.front() - 1;
      } else {
        add = lens.back() + 1;
      }
      if (add > n - 1)
        throw PreconditionError("fill_full: chain " + std::to_string(h) + " cannot hold " +
                                std::to_string(params.k()) + " intervals on a cycle of length " + std::to_string(n));
      lens.insert(std::lower_bound(lens.begin(), lens.end(), add), add);
    }
  }
  IntervalFamily out = from_chains(cons.perm(), chains);
  if (!is_t_intersecting(out, params.t())) throw BugTrap("fill_full: an added interval broke t-intersection");
  if (!is_full_consecutive(out, params.k())) throw BugTrap("fill_full: output is not full consecutive");
  if (weight(out) < weight(g)) throw BugTrap("fill_full: weight decreased");
  return out;
}

Interval bar_complement(const Interval& iv, int n, int t) {
  if (iv.len < t) throw PreconditionError("bar_complement: interval shorter than t");
  const int len = n + t - iv.len;
  if (len > n - 1)
    throw PreconditionError("bar_complement: result would have size " + std::to_string(len) + " >= n");
  const int tail = (t + 1) / 2;
  return {mod(iv.start + iv.len - tail, n), len};
}

ComplementLemmaReport check_complement_lemma(const IntervalFamily& g, const Params& params) {
  require_matching(g, params, "check_complement_lemma");
  ComplementLemmaReport rep;
  if (g.empty()) return rep;
  const int n = g.n();
  const int t = params.t();
  const int m = std::max(0, params.middle() - g.min_len());
  if (band_half_width(g, params) > params.k() - 1)
    throw PreconditionError("check_complement_lemma: sizes escape the band for every m <= k - 1");
  std::vector<int> shortest(static_cast<std::size_t>(n), 0);
  for (const auto& iv : g.members()) {
    auto& s = shortest[static_cast<std::size_t>(iv.start)];
    s = s == 0 ? iv.len : std::min(s, iv.len);
  }
  for (const auto& iv : g.members()) {
    const Interval bar = bar_complement(iv, n, t);
    ++rep.checked;
    for (int o = 0; o < bar.len && rep.holds; ++o) {
      const int s = shortest[static_cast<std::size_t>(mod(bar.start + o, n))];
      if (s == 0 || o + s > bar.len || (o == 0 && s == bar.len)) continue;
      rep.holds = false;
      rep.witness = "member (" + std::to_string(mod(bar.start + o, n)) + "," + std::to_string(s) +
                    ") is a proper subinterval of bar(" + std::to_string(iv.start) + "," + std::to_string(iv.len) +
                    ") = (" + std::to_string(bar.start) + "," + std::to_string(bar.len) + ")";
    }
    if (rep.holds && iv.len == params.middle() - m && !g.contains(bar)) {
      rep.holds = false;
      rep.witness = "bar(" + std::to_string(iv.start) + "," + std::to_string(iv.len) + ") = (" +
                    std::to_string(bar.start) + "," + std::to_string(bar.len) + ") is missing";
    }
    if (!rep.holds) break;
  }
  return rep;
}

std::int64_t GProfile::at(int i) const {
  const int idx = i + m;
  if (idx < 0 || idx >= static_cast<int>(counts.size())) return 0;
  return counts[static_cast<std::size_t>(idx)];
}

std::int64_t GProfile::sum(int lo, int hi) const {
  std::int64_t s = 0;
  for (int i = lo; i <= hi; ++i) s += at(i);
  return s;
}

std::int64_t GProfile::total() const { return std::accumulate(counts.begin(), counts.end(), std::int64_t{0}); }

GProfile g_profile(const IntervalFamily& g, const Params& params) {
  require_matching(g, params, "g_profile");
  GProfile p;
  p.n = params.n();
  p.t = params.t();
  p.k = params.k();
  p.m = g.empty() ? 0 : std::max(0, params.middle() - g.min_len());
  p.counts.assign(static_cast<std::size_t>(p.k + 2 * p.m), 0);
  for (const auto& iv : g.members()) {
    const int i = iv.len - params.middle();
    if (i < -p.m || i > p.k + p.m - 1)
      throw PreconditionError("g_profile: interval of length " + std::to_string(iv.len) + " outside the band");
    ++p.counts[static_cast<std::size_t>(i + p.m)];
  }
  return p;
}

std::vector<InequalityCheck> evaluate_inequalities(const GProfile& g) {
  const int m = g.m;
  const int k = g.k;
  const std::int64_t n = g.n;
  std::vector<InequalityCheck> out;
  auto neg_sum = [&](int lo, int hi) {  // sum of g_{-i}, lo <= i <= hi
    std::int64_t s = 0;
    for (int i = lo; i <= hi; ++i) s += g.at(-i);
    return s;
  };
  auto push = [&](int clause, int j, std::int64_t lhs, std::int64_t rhs) {
    out.push_back({clause, j, lhs, rhs, lhs <= rhs});
  };
  for (int j = 0; j <= m - 1; ++j) {
    if (j < k - m)
      push(1, j, g.at(-j - 1) + g.at(j), n);
    else
      push(2, j, g.sum(-(j + 1), j), (j + 1) * n - neg_sum(k - j, m));
  }
  for (int j = 1; j <= m; ++j) {
    if (j < k - m) push(3, j, g.sum(-m, k - j), (k - j + 1) * n - neg_sum(j, m));
    push(4, j, g.sum(-m, k + j - 2), k * n - g.sum(-m, -j));
  }
  return out;
}

bool InequalityReport::all_hold() const {
  return std::all_of(inequalities.begin(), inequalities.end(), [](const auto& c) { return c.holds; }) &&
         std::all_of(missing.begin(), missing.end(), [](const auto& c) { return c.holds; });
}

namespace {

MissingFamilyCheck missing_families(const IntervalFamily& g, const Params& params, int clause, int j, int level,
                                    std::int64_t h1_floor, std::int64_t above_floor) {
  const int n = g.n();
  std::vector<Mask> pos;
  pos.reserve(g.size());
  for (const auto& iv : g.members()) pos.push_back(positions_of(iv, n));
  MissingFamilyCheck c{clause, j, level, 0, 0, 0, h1_floor, above_floor, true, true};
  for (int len = params.middle(); len <= std::min(params.middle() + level, n - 1); ++len) {
    for (int s = 0; s < n; ++s) {
      const Interval h{s, len};
      if (g.contains(h)) continue;
      const Mask hp = positions_of(h, n);
      bool above = false, below = false;
      for (Mask p : pos) {
        above = above || is_proper_subset(p, hp);
        below = below || is_proper_subset(hp, p);
      }
      const bool in1 = !above;
      const bool in2 = !below;
      c.h1 += in1;
      c.h2 += in2;
      c.above += above;
      if (in1 && in2) c.disjoint = false;
    }
  }
  c.holds = c.disjoint && static_cast<std::int64_t>(c.h1) >= h1_floor && static_cast<std::int64_t>(c.above) >= above_floor;
  return c;
}

}  // namespace

InequalityReport check_inequalities(const IntervalFamily& g, const Params& params) {
  require_matching(g, params, "check_inequalities");
  params.require_even("check_inequalities");
  if (g.empty()) throw PreconditionError("check_inequalities: empty family");
  if (!is_full_consecutive(g, params.k())) throw PreconditionError("check_inequalities: family is not full consecutive");
  if (!is_t_intersecting(g, params.t()))
    throw PreconditionError("check_inequalities: family is not " + std::to_string(params.t()) + "-intersecting");
  InequalityReport rep{g_profile(g, params), {}, {}};
  const GProfile& p = rep.profile;
  const int m = p.m;
  const int k = p.k;
  if (m >= k) throw PreconditionError("check_inequalities: requires m < k");
  if (g.max_len() > params.middle() + k - 1 + m)
    throw PreconditionError("check_inequalities: longest member exceeds middle + k - 1 + m");
  rep.inequalities = evaluate_inequalities(p);
  auto neg_sum = [&](int lo, int hi) {
    std::int64_t s = 0;
    for (int i = lo; i <= hi; ++i) s += p.at(-i);
    return s;
  };
  for (int j = 0; j <= m - 1; ++j)
    if (j >= k - m) rep.missing.push_back(missing_families(g, params, 2, j, j, neg_sum(1, j + 1), neg_sum(k - j, m)));
  for (int j = 1; j <= m; ++j)
    if (j < k - m) rep.missing.push_back(missing_families(g, params, 3, j, k - j, neg_sum(1, m), neg_sum(j, m)));
  return rep;
}

BigInt cycle_weight_bound(const Params& params) {
  params.require_even("cycle_weight_bound");
  BigInt s = 0;
  for (int i = 0; i < params.k(); ++i) s += binomial(params.n(), params.middle() + i);
  return s * params.n();
}

ExactComparison check_weight_bound(const IntervalFamily& g, const Params& params) {
  require_matching(g, params, "check_weight_bound");
  ExactComparison c;
  c.lhs = weight(g);
  c.rhs = cycle_weight_bound(params);
  c.holds = c.lhs <= c.rhs;
  return c;
}

ExactComparison averaging_identity(const Family& fam) {
  const int n = fam.n();
  if (n > 7) throw PreconditionError("averaging_identity: requires n <= 7");
  ExactComparison c;
  if (n < 2) {
    c.holds = true;
    return c;
  }
  const auto row = binomial_row(n);
  for (const auto& sigma : cyclic_orders(n)) {
    const auto restricted = restrict_to_cycle(fam, sigma);
    for (const auto& iv : restricted.intervals.members()) c.lhs += row[static_cast<std::size_t>(iv.len)];
  }
  std::size_t proper = 0;
  for (Mask m : fam) {
    const int s = cardinality(m);
    proper += (s >= 1 && s <= n - 1);
  }
  BigInt fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  c.rhs = fact * proper;
  c.holds = c.lhs == c.rhs;
  return c;
}

}  // namespace spernerlab
