#include "spernerlab/coefficients.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>
#include <numeric>

#include "spernerlab/errors.hpp"

namespace spernerlab {

const char* to_string(Stage s) {
  switch (s) {
    case Stage::g: return "g";
    case Stage::gprime: return "g'";
    case Stage::gdoubleprime: return "g''";
  }
  return "?";
}

CoeffVector CoeffVector::from_profile(const GProfile& p) {
  return CoeffVector{Stage::g, p.m, p.k, -p.m, p.counts};
}

std::int64_t CoeffVector::at(int i) const {
  if (i < lo || i > hi()) return 0;
  return values[static_cast<std::size_t>(i - lo)];
}

std::int64_t CoeffVector::sum() const { return std::accumulate(values.begin(), values.end(), std::int64_t{0}); }

std::int64_t CoeffVector::sum(int from, int to) const {
  std::int64_t s = 0;
  for (int i = from; i <= to; ++i) s += at(i);
  return s;
}

CoeffVector to_gprime(const CoeffVector& g) {
  if (g.stage != Stage::g) throw PreconditionError("to_gprime: input must be a g vector");
  if (std::any_of(g.values.begin(), g.values.end(), [](auto v) { return v < 0; }))
    throw PreconditionError("to_gprime: negative coefficient");
  const int m = g.m;
  const int k = g.k;
  CoeffVector out{Stage::gprime, m, k, -m, std::vector<std::int64_t>(static_cast<std::size_t>(k + 2 * m), 0)};
  if (m == 0) {
    for (int i = 0; i <= k - 1; ++i) out.values[static_cast<std::size_t>(i)] = g.at(i);
    return out;
  }
  auto set = [&](int i, std::int64_t v) { out.values[static_cast<std::size_t>(i + m)] = v; };
  for (int i = -m; i <= k - 1; ++i) set(i, g.at(i));
  for (int i = 2; i <= m; ++i) set(k - 1 + i, g.at(-i));
  std::int64_t gk = g.sum(k, k + m - 1);
  for (int i = 2; i <= m; ++i) gk -= g.at(-i);
  if (gk < 0) throw BugTrap("to_gprime: g'_k = " + std::to_string(gk) + " < 0");
  set(k, gk);
  return out;
}

CoeffVector to_gdoubleprime(const CoeffVector& gp, const Params& params) {
  if (gp.stage != Stage::gprime) throw PreconditionError("to_gdoubleprime: input must be a g' vector");
  if (gp.k != params.k()) throw PreconditionError("to_gdoubleprime: k does not match params");
  const int m = gp.m;
  const int k = gp.k;
  CoeffVector out{Stage::gdoubleprime, m, k, 0, std::vector<std::int64_t>(static_cast<std::size_t>(k + 1), 0)};
  for (int j = 0; j <= k - 1; ++j) {
    std::int64_t v = gp.at(j);
    if (j <= m - 1) v += gp.at(-(j + 1));
    if (j >= k - m) v += gp.at(-(k - j));
    out.values[static_cast<std::size_t>(j)] = v;
  }
  const std::int64_t top = gp.at(k) - gp.at(-1);
  if (top < 0) throw BugTrap("to_gdoubleprime: g''_k = " + std::to_string(top) + " < 0");
  out.values[static_cast<std::size_t>(k)] = top;
  return out;
}

BigInt weighted_sum(const CoeffVector& v, int n, int t) {
  if ((n + t) % 2) throw PreconditionError("weighted_sum: requires n + t even");
  const int mid = (n + t) / 2;
  BigInt s = 0;
  for (int i = v.lo; i <= v.hi(); ++i)
    if (v.at(i) != 0) s += binomial(n, mid + i) * v.at(i);
  return s;
}

std::vector<PrefixBound> prefix_bounds(const CoeffVector& gpp, int n) {
  if (gpp.stage != Stage::gdoubleprime) throw PreconditionError("prefix_bounds: input must be a g'' vector");
  const int m = gpp.m;
  const int k = gpp.k;
  std::vector<PrefixBound> out;
  std::int64_t running = 0;
  for (int j = 0; j <= k - 1; ++j) {
    running += gpp.at(j);
    std::string source;
    if (j <= m - 1)
      source = j < k - m ? "inequality (1)" : "inequality (2)";
    else if (j < k - m)
      source = "earlier prefixes and g_j <= n";
    else if (j == k - 1)
      source = "total mass k n";
    else
      source = "inequality (3)";
    const std::int64_t rhs = static_cast<std::int64_t>(j + 1) * n;
    out.push_back({j, running, rhs, std::move(source), running <= rhs});
  }
  return out;
}

FinalBoundCheck final_bound_from_prefixes(std::span<const std::int64_t> values, std::int64_t n,
                                          std::span<const BigInt> d) {
  if (values.size() != d.size() || values.empty())
    throw PreconditionError("final_bound_from_prefixes: values and d must have equal non-zero length");
  const std::size_t k = values.size() - 1;
  FinalBoundCheck c;
  bool hyp = std::accumulate(values.begin(), values.end(), std::int64_t{0}) == static_cast<std::int64_t>(k) * n;
  std::int64_t running = 0;
  for (std::size_t j = 0; j < k; ++j) {
    running += values[j];
    hyp = hyp && running <= static_cast<std::int64_t>(j + 1) * n;
  }
  for (std::size_t i = 1; i < d.size(); ++i) hyp = hyp && d[i] <= d[i - 1];
  hyp = hyp && std::all_of(values.begin(), values.end(), [](auto v) { return v >= 0; });
  c.hypotheses = hyp;
  for (std::size_t i = 0; i < values.size(); ++i) c.lhs += d[i] * values[i];
  for (std::size_t i = 0; i < k; ++i) c.rhs += d[i] * n;
  c.holds = c.lhs <= c.rhs;
  return c;
}

namespace {

void require_swap_args(int a, int b, const char* op) {
  if (!(a < b) || b <= 0) throw PreconditionError(std::string(op) + ": requires a < b and b > 0");
}

/// C(n, h + j) / C(n, h).
Rational ratio_to_middle(std::int64_t n, std::int64_t h, int j) {
  Rational r = 1;
  if (j >= 0) {
    for (int i = 0; i < j; ++i) {
      if (n - h - i <= 0) return 0;
      r *= Rational(n - h - i, h + i + 1);
    }
  } else {
    for (int i = 1; i <= -j; ++i) {
      if (h - i + 1 <= 0) return 0;
      r *= Rational(h - i + 1, n - h + i);
    }
  }
  return r;
}

}  // namespace

bool binom_swap(std::int64_t n, int a, int b) {
  require_swap_args(a, b, "binom_swap");
  const std::int64_t h = n / 2;
  return binomial(n, h + a) + binomial(n, h + b) <= binomial(n, h + a + 1) + binomial(n, h + b - 1);
}

bool binom_swap_ratio(std::int64_t n, int a, int b) {
  require_swap_args(a, b, "binom_swap_ratio");
  const std::int64_t h = n / 2;
  return ratio_to_middle(n, h, a) + ratio_to_middle(n, h, b) <=
         ratio_to_middle(n, h, a + 1) + ratio_to_middle(n, h, b - 1);
}

std::optional<std::int64_t> minimal_n0(int a, int b, std::int64_t n_max) {
  require_swap_args(a, b, "minimal_n0");
  if (n_max < 1 || !binom_swap_ratio(n_max, a, b)) return std::nullopt;
  std::int64_t n = n_max;
  while (n > 1 && binom_swap_ratio(n - 1, a, b)) --n;
  return n;
}

DominanceResult rearrangement_dominance(std::span<const BigInt> a, std::span<const BigInt> b,
                                        std::span<const BigInt> d) {
  std::vector<std::string> violations;
  if (a.size() != b.size() || a.size() != d.size()) violations.push_back("vectors differ in length");
  const std::size_t len = std::min({a.size(), b.size(), d.size()});
  auto negative = [](std::span<const BigInt> v) { return std::any_of(v.begin(), v.end(), [](const BigInt& x) { return x < 0; }); };
  if (negative(a)) violations.push_back("a has a negative entry");
  if (negative(b)) violations.push_back("b has a negative entry");
  if (negative(d)) violations.push_back("d has a negative entry");
  for (std::size_t i = 1; i < len; ++i) {
    if (d[i] > d[i - 1]) {
      violations.push_back("d is not non-increasing at position " + std::to_string(i + 1));
      break;
    }
  }
  BigInt suffix_a = 0, suffix_b = 0;
  for (std::size_t i = len; i-- > 1;) {
    suffix_a += a[i];
    suffix_b += b[i];
    if (suffix_a > suffix_b) {
      violations.push_back("suffix sum of a exceeds b from position " + std::to_string(i + 1));
      break;
    }
  }
  if (len > 0) {
    const BigInt ta = std::accumulate(a.begin(), a.end(), BigInt(0));
    const BigInt tb = std::accumulate(b.begin(), b.end(), BigInt(0));
    if (ta != tb) violations.push_back("sum a != sum b");
  }
  if (!violations.empty()) {
    std::string msg = "rearrangement_dominance:";
    for (const auto& v : violations) msg += " [" + v + "]";
    throw PreconditionError(msg);
  }
  DominanceResult r;
  for (std::size_t i = 0; i < len; ++i) r.difference += (a[i] - b[i]) * d[i];
  r.holds = r.difference >= 0;
  return r;
}

bool binomial_push(int n, int t, int k, int j) {
  if ((n + t) % 2 != 0 || j < 1 || j >= k) throw PreconditionError("binomial_push: requires n + t even and 1 <= j < k");
  const int mid = (n + t) / 2;
  return binomial(n, mid - j) + binomial(n, mid + k + j - 1) <= binomial(n, mid + j - 1) + binomial(n, mid + k - j);
}

int push_threshold(int t, int k, int m) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, int> memo;
  const std::lock_guard lock(mutex);
  const auto key = std::make_tuple(t, k, m);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int top = kPushHorizon - ((kPushHorizon + t) % 2);
  int from = top;
  for (int n = top; n >= std::max(1, t); n -= 2) {
    bool ok = true;
    for (int j = 1; j <= m && ok; ++j) ok = binomial_push(n, t, k, j);
    if (!ok) break;
    from = n;
  }
  memo.emplace(key, from);
  return from;
}

bool CoefficientChainReport::all_hold() const {
  return mass_conserved && gprime_k_dominates && suffix_dominance && top_block_dominance &&
         (!large_n || (binom_pushes && monotone && weight_bound)) && prefixes_hold && final_bound.holds;
}

std::string CoefficientChainReport::failures() const {
  std::string out;
  auto note = [&](bool ok, const char* what) {
    if (ok) return;
    if (!out.empty()) out += "; ";
    out += what;
  };
  note(mass_conserved, "mass");
  note(gprime_k_dominates, "g'_k >= g_{-1}");
  note(suffix_dominance, "suffix dominance");
  note(top_block_dominance, "top block dominance");
  note(binom_pushes || !large_n, "binomial push");
  note(monotone || !large_n, "weighted sums monotone");
  note(prefixes_hold, "prefix bounds");
  note(final_bound.holds, "final bound");
  note(weight_bound || !large_n, "w(G) <= bound");
  return out;
}

CoefficientChainReport run_coefficient_chain(const GProfile& profile) {
  const Params params(profile.n, profile.t, profile.k);
  params.require_even("run_coefficient_chain");
  const int n = profile.n;
  const int t = profile.t;
  const int k = profile.k;
  const int m = profile.m;
  const int mid = params.middle();
  CoefficientChainReport r;
  r.g = CoeffVector::from_profile(profile);
  r.gprime = to_gprime(r.g);
  r.gdoubleprime = to_gdoubleprime(r.gprime, params);
  r.expected_mass = static_cast<std::int64_t>(k) * n;
  r.mass_conserved = r.g.sum() == r.expected_mass && r.gprime.sum() == r.expected_mass &&
                     r.gdoubleprime.sum(0, k) == r.expected_mass;
  r.gprime_k_dominates = m == 0 || r.gprime.at(k) >= r.g.at(-1);

  r.suffix_dominance = true;
  for (int j = 2; j <= m; ++j)
    r.suffix_dominance = r.suffix_dominance && r.gprime.sum(k - 1 + j, k - 1 + m) <= r.g.sum(k - 1 + j, k - 1 + m);

  r.top_block_dominance = true;
  if (m >= 1 && r.suffix_dominance) {
    std::vector<BigInt> a, b, d;
    for (int i = k; i <= k + m - 1; ++i) {
      a.emplace_back(r.gprime.at(i));
      b.emplace_back(r.g.at(i));
      d.push_back(binomial(n, mid + i));
    }
    r.top_block_dominance = rearrangement_dominance(a, b, d).holds;
  }

  r.binom_pushes = true;
  for (int j = 1; j <= m; ++j)
    if (r.g.at(-j) != 0) r.binom_pushes = r.binom_pushes && binomial_push(n, t, k, j);
  r.large_n = m == 0 || n >= push_threshold(t, k, m);

  r.w_g = weighted_sum(r.g, n, t);
  r.w_gprime = weighted_sum(r.gprime, n, t);
  r.w_gdoubleprime = weighted_sum(r.gdoubleprime, n, t);
  r.bound = cycle_weight_bound(params);
  r.monotone = r.w_g <= r.w_gprime && r.w_gprime <= r.w_gdoubleprime;

  r.prefixes = prefix_bounds(r.gdoubleprime, n);
  r.prefixes_hold = std::all_of(r.prefixes.begin(), r.prefixes.end(), [](const auto& p) { return p.holds; });

  std::vector<BigInt> d;
  for (int i = 0; i <= k; ++i) d.push_back(binomial(n, mid + i));
  r.final_bound = final_bound_from_prefixes(r.gdoubleprime.values, n, d);
  r.final_bound.holds = r.final_bound.holds && r.final_bound.rhs == r.bound;
  r.weight_bound = r.w_g <= r.bound;
  return r;
}

}  // namespace spernerlab
