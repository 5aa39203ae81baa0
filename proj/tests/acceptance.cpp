// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "spernerlab/bounds.hpp"
#include "spernerlab/coefficients.hpp"
#include "spernerlab/compression.hpp"
#include "spernerlab/constructions.hpp"
#include "spernerlab/cycle.hpp"
#include "spernerlab/cycle_generators.hpp"
#include "spernerlab/errors.hpp"
#include "spernerlab/generators.hpp"
#include "spernerlab/search.hpp"

using namespace spernerlab;

namespace {

constexpr std::uint64_t kSeed = 20240601;

// Criterion 5 and 7 scale.
constexpr int kCycleNMax = 40;
constexpr int kCycleTMax = 4;
constexpr int kCycleKMax = 3;
constexpr int kInstancesPerCell = 1000;
// Criterion 6 scale.
constexpr int kCompressionNMax = 10;
constexpr int kFamiliesPerN = 1000;
// Criterion 8 scale.
constexpr std::int64_t kSwapNMax = 10000;
constexpr int kRearrangementTriples = 10000;

struct Verdict {
  bool pass = true;
  std::string detail;
};

std::string str(const BigInt& v) { return v.str(); }

Verdict even_case_search() {
  Verdict v;
  int cases = 0;
  std::ostringstream bad;
  for (int n = 2; n <= 7; ++n)
    for (int t = 1; t <= n - 1; ++t) {
      if ((n + t) % 2) continue;
      for (int k = 1; k <= 3; ++k) {
        const Params p(n, t, k);
        const auto r = max_family(SearchSpec(p));
        const BigInt expected = even_case_bound(p);
        ++cases;
        if (!r.proven_optimal || BigInt(r.best_size) != expected) {
          v.pass = false;
          bad << " (" << n << "," << t << "," << k << ")=" << r.best_size << " want " << str(expected);
        }
      }
    }
  v.detail = std::to_string(cases) + " cases, exact equality" + bad.str();
  return v;
}

Verdict small_odd_case() {
  Verdict v;
  const Params p(5, 2, 2);
  const auto r = max_family(SearchSpec(p));
  const BigInt a = count_A(p), b = count_B(p);
  v.pass = r.proven_optimal && r.best_size == 9 && a == 9 && b == 8 && BigInt(construct_A(p).size()) == a &&
           BigInt(construct_B(p).size()) == b;
  std::ostringstream d;
  d << "(5,2,2) search=" << r.best_size << " |A|=" << str(a) << " |B|=" << str(b);

  const Params q(7, 2, 2);
  SearchSpec stretch(q);
  stretch.layer_window = compression_window(q);
  stretch.budget.seconds = 3600;
  const auto s = max_family(stretch);
  d << "; stretch (7,2,2) window " << s.window_lo << ":" << s.window_hi << " best=" << s.best_size
    << (s.budget_exceeded ? " budget-exceeded" : s.proven_optimal ? " proven" : " unproven") << " |A|=" << str(count_A(q))
    << " |B|=" << str(count_B(q));
  v.detail = d.str();
  return v;
}

Verdict b_closed_form() {
  Verdict v;
  long cases = 0, materialized = 0;
  std::ostringstream bad;
  for (int n = 2; n <= 100; ++n)
    for (int t = 1; t <= n - 1; ++t) {
      if ((n + t) % 2 == 0) continue;
      for (int k = 1; k <= 5; ++k) {
        const Params p(n, t, k);
        const BigInt b = count_B(p);
        ++cases;
        if (b != odd_case_closed_form(p)) {
          v.pass = false;
          bad << " (" << n << "," << t << "," << k << ")";
        }
        if (n <= 14) {
          ++materialized;
          if (BigInt(construct_B(p).size()) != b) {
            v.pass = false;
            bad << " materialized(" << n << "," << t << "," << k << ")";
          }
        }
      }
    }
  std::ostringstream cross;
  for (auto [t, k] : {std::pair{2, 2}, {1, 2}, {3, 3}}) {
    const auto from = b_beats_a_from(t, k, 1000);
    if (!from) {
      v.pass = false;
      cross << " (" << t << "," << k << ") none";
      continue;
    }
    for (int n = *from; n <= 1000; ++n) {
      if ((n + t) % 2 == 0) continue;
      if (count_B(Params(n, t, k)) <= count_A(Params(n, t, k))) {
        v.pass = false;
        cross << " (" << t << "," << k << ") fails at n=" << n;
        break;
      }
    }
    cross << " (" << t << "," << k << ")->" << *from;
  }
  v.detail = std::to_string(cases) + " closed-form cases (" + std::to_string(materialized) +
             " materialized); |B|>|A| up to 1000 from" + cross.str() + bad.str();
  return v;
}

Verdict averaging() {
  Verdict v;
  Rng rng(kSeed ^ 4);
  int checked = 0;
  for (int n = 4; n <= 6; ++n)
    for (int trial = 0; trial < 100; ++trial) {
      const Family f = random_family(n, 1, n - 1, rng, 12);
      const auto c = averaging_identity(f);
      ++checked;
      if (!c.holds || c.lhs != c.rhs) v.pass = false;
    }
  v.detail = std::to_string(checked) + " families, exact equality";
  return v;
}

struct ChainTally {
  long profiles = 0;
  long mass = 0, monotone = 0, prefixes = 0, end_to_end = 0;
  long monotone_below_threshold = 0;
  long below_threshold = 0;
  std::map<std::string, long> by_cell;
};

std::string cell_name(int t, int k, int m) {
  return "(t=" + std::to_string(t) + ",k=" + std::to_string(k) + ",m=" + std::to_string(m) + ")";
}

void tally_chain(const GProfile& profile, const IntervalFamily& full, const Params& p, int m, ChainTally& ct) {
  const auto r = run_coefficient_chain(profile);
  ++ct.profiles;
  const std::int64_t kn = static_cast<std::int64_t>(p.k()) * p.n();
  const bool mass = profile.total() == kn && r.g.sum() == kn && r.gprime.sum() == kn && r.gdoubleprime.sum() == kn;
  const bool monotone = r.w_g <= r.w_gprime && r.w_gprime <= r.w_gdoubleprime;
  const bool end = r.w_g == weight(full) && weight(full) <= cycle_weight_bound(p) && r.final_bound.holds &&
                   r.w_gdoubleprime <= r.bound;
  if (!r.large_n) ++ct.below_threshold;
  if (!mass) ++ct.mass;
  if (!monotone) {
    ++ct.monotone;
    if (!r.large_n) ++ct.monotone_below_threshold;
    ++ct.by_cell[cell_name(p.t(), p.k(), m)];
  }
  if (!r.prefixes_hold) ++ct.prefixes;
  if (!end) ++ct.end_to_end;
}

struct CycleTally {
  long instances = 0;
  int cells = 0;
  int short_cells = 0;
  long inequalities = 0, complement = 0, consecutive = 0, fill = 0;
  std::map<std::string, long> complement_by_cell;
};

void cycle_universals(CycleTally& cy, ChainTally& ct) {
  for (int t = 1; t <= kCycleTMax; ++t)
    for (int k = 1; k <= kCycleKMax; ++k)
      for (int m = 0; m < k; ++m) {
        std::vector<int> ns;
        for (int n = min_cycle_n(t, k, m); n <= kCycleNMax; n += 2) ns.push_back(n);
        ++cy.cells;
        if (ns.empty()) {
          ++cy.short_cells;
          continue;
        }
        Rng rng(kSeed + static_cast<std::uint64_t>(100 * t + 10 * k + m));
        int got = 0;
        for (long attempt = 0; got < kInstancesPerCell && attempt < 20L * kInstancesPerCell; ++attempt) {
          const Params p(ns[static_cast<std::size_t>(attempt) % ns.size()], t, k);
          const auto inst = random_full_consecutive(p, m, rng);
          if (!inst) continue;
          ++got;
          if (weight(inst->consecutive) < weight(inst->raw) || !is_consecutive(inst->consecutive)) ++cy.consecutive;
          if (weight(inst->full) < weight(inst->consecutive) || !is_full_consecutive(inst->full, k)) ++cy.fill;
          if (!check_complement_lemma(inst->full, p).holds) {
            ++cy.complement;
            ++cy.complement_by_cell[cell_name(t, k, m)];
          }
          const auto ineq = check_inequalities(inst->full, p);
          if (!ineq.all_hold()) ++cy.inequalities;
          tally_chain(ineq.profile, inst->full, p, m, ct);
        }
        cy.instances += got;
        if (got < kInstancesPerCell) ++cy.short_cells;
      }
}

std::string join_cells(const std::map<std::string, long>& cells) {
  std::string s;
  for (const auto& [name, count] : cells) s += " " + name + "x" + std::to_string(count);
  return s;
}

Verdict cycle_verdict(const CycleTally& cy) {
  Verdict v;
  v.pass = cy.short_cells == 0 && cy.inequalities == 0 && cy.complement == 0 && cy.consecutive == 0 && cy.fill == 0;
  std::ostringstream d;
  d << cy.instances << " instances over " << cy.cells << " cells (" << cy.short_cells << " under "
    << kInstancesPerCell << "); violations: inequalities=" << cy.inequalities << " complement=" << cy.complement
    << " make_consecutive=" << cy.consecutive << " fill_full=" << cy.fill;
  if (cy.complement) d << "; complement failures in" << join_cells(cy.complement_by_cell);
  v.detail = d.str();
  return v;
}

Verdict chain_verdict(const ChainTally& ct) {
  Verdict v;
  v.pass = ct.profiles > 0 && ct.mass == 0 && ct.monotone == 0 && ct.prefixes == 0 && ct.end_to_end == 0;
  std::ostringstream d;
  d << ct.profiles << " profiles (" << ct.below_threshold << " below the large-n push threshold); violations: mass="
    << ct.mass << " monotone=" << ct.monotone << " (" << ct.monotone_below_threshold
    << " below threshold) prefixes=" << ct.prefixes << " end-to-end=" << ct.end_to_end;
  if (ct.monotone) d << "; monotone failures in" << join_cells(ct.by_cell);
  v.detail = d.str();
  return v;
}

Verdict compression() {
  Verdict v;
  Rng rng(kSeed ^ 6);
  long checked = 0, failures = 0;
  std::string first;
  for (int n = 1; n <= kCompressionNMax; ++n)
    for (int trial = 0; trial < kFamiliesPerN; ++trial) {
      const int t = static_cast<int>(uniform_int(rng, 1, std::min(n, 4)));
      const int k = static_cast<int>(uniform_int(rng, 1, 3));
      const Params p(n, t, k);
      const Family f = random_valid_family(p, rng);
      ++checked;
      auto ok = [&](const Family& g) { return is_t_intersecting(g, t) && is_k_sperner(g, k); };
      try {
        const auto up = up_compress(f, p);
        const auto down = down_shift(up.family, p);
        const auto norm = normalize(f, p);
        const bool good = ok(up.family) && ok(down.family) && up.family.size() >= f.size() &&
                          down.family.size() >= up.family.size() && norm.family == down.family &&
                          norm.report.m <= k - 1 && within_band(norm.family, p, norm.report.m);
        if (!good) {
          ++failures;
          if (first.empty()) first = f.str();
        }
      } catch (const BugTrap& e) {
        ++failures;
        if (first.empty()) first = e.what();
      }
    }
  v.pass = failures == 0;
  v.detail = std::to_string(checked) + " families over n<=" + std::to_string(kCompressionNMax) +
             ", violations=" + std::to_string(failures) + (first.empty() ? "" : " first " + first);
  return v;
}

Verdict binomial_facts() {
  Verdict v;
  std::int64_t worst = 0;
  std::ostringstream bad;
  for (int b = 1; b <= 6; ++b)
    for (int a = 0; a < b; ++a) {
      const auto n0 = minimal_n0(a, b, kSwapNMax);
      if (!n0) {
        v.pass = false;
        bad << " no n0 (" << a << "," << b << ")";
        continue;
      }
      worst = std::max(worst, *n0);
      for (std::int64_t n = *n0; n <= kSwapNMax; ++n)
        if (!binom_swap_ratio(n, a, b)) {
          v.pass = false;
          bad << " suffix breaks (" << a << "," << b << ") n=" << n;
          break;
        }
    }
  Rng rng(kSeed ^ 8);
  int triples = 0;
  for (int trial = 0; trial < kRearrangementTriples; ++trial) {
    const auto len = static_cast<std::size_t>(uniform_int(rng, 1, 8));
    std::vector<BigInt> b(len), d(len);
    for (auto& x : b) x = uniform_int(rng, 0, 50);
    auto a = b;
    for (int move = 0; move < 6 && len > 1; ++move) {
      const auto from = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(len) - 1));
      const auto to = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(from) - 1));
      const auto amount = uniform_int(rng, 0, static_cast<std::int64_t>(a[from]));
      a[from] -= amount;
      a[to] += amount;
    }
    BigInt cur = uniform_int(rng, 0, 100000);
    for (auto& x : d) {
      x = cur;
      cur -= uniform_int(rng, 0, static_cast<std::int64_t>(cur));
    }
    const auto r = rearrangement_dominance(a, b, d);
    ++triples;
    if (!r.holds || r.difference < 0) {
      v.pass = false;
      bad << " rearrangement trial " << trial;
      break;
    }
  }
  v.detail = "21 pairs, largest n0=" + std::to_string(worst) + " suffix to " + std::to_string(kSwapNMax) + "; " +
             std::to_string(triples) + " rearrangement triples" + bad.str();
  return v;
}

Verdict classical_bounds() {
  Verdict v;
  std::ostringstream bad;
  int cases = 0;
  auto check = [&](const char* name, const Params& p, int s, const BigInt& bound) {
    SearchSpec spec(p);
    spec.intersection = s;
    const auto r = max_family(spec);
    ++cases;
    if (!r.proven_optimal || BigInt(r.best_size) > bound) {
      v.pass = false;
      bad << " " << name << "(" << p.n() << "," << s << "," << p.k() << ")=" << r.best_size << ">" << str(bound);
    }
    if (BigInt(r.best_size) != bound) bad << " " << name << " not attained at n=" << p.n();
  };
  for (int n = 1; n <= 6; ++n) {
    check("sperner", Params(n, 1, 1), 0, sperner_bound(n));
    for (int k = 1; k <= 3; ++k) check("erdos", Params(n, 1, k), 0, erdos_bound(n, k));
    for (int t = 1; t <= n; ++t) check("milner", Params(n, t, 1), t, milner_bound(n, t));
  }
  v.detail = std::to_string(cases) + " exhaustive searches at n<=6" + bad.str();
  return v;
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](int id, const char* name, const std::function<Verdict()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    all = all && v.pass;
    std::printf("criterion %d %s: %s | %s | %.1fs\n", id, v.pass ? "PASS" : "FAIL", name, v.detail.c_str(),
                took.count());
    std::fflush(stdout);
  };

  CycleTally cy;
  ChainTally ct;
  report(1, "even-case exact search n<=7", even_case_search);
  report(2, "(5,2,2) = |A| = 9 > |B| = 8", small_odd_case);
  report(3, "|B| closed form and crossover", b_closed_form);
  report(4, "averaging identity", averaging);
  report(5, "cycle-method universals", [&] {
    cycle_universals(cy, ct);
    return cycle_verdict(cy);
  });
  report(6, "compression invariants", compression);
  report(7, "coefficient chain on harvested profiles", [&] { return chain_verdict(ct); });
  report(8, "binomial swap and rearrangement", binomial_facts);
  report(9, "classical bound oracles", classical_bounds);
  return all ? 0 : 1;
}
