#include "spernerlab/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "spernerlab/bounds.hpp"
#include "spernerlab/coefficients.hpp"
#include "spernerlab/compression.hpp"
#include "spernerlab/constructions.hpp"
#include "spernerlab/cycle.hpp"
#include "spernerlab/cycle_generators.hpp"
#include "spernerlab/errors.hpp"
#include "spernerlab/family_io.hpp"
#include "spernerlab/generators.hpp"

namespace spernerlab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::violated:
      return "violated";
    case Verdict::skipped_precondition:
      return "skipped-precondition";
    case Verdict::budget_exceeded:
      return "budget-exceeded";
  }
  return "?";
}

std::uint64_t derive_seed(std::uint64_t seed, const std::string& check, int n, int t, int k) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  feed(check);
  feed("|" + std::to_string(n) + "|" + std::to_string(t) + "|" + std::to_string(k));
  // splitmix64 finalizer over the combination.
  std::uint64_t z = h ^ (seed + 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

struct Outcome {
  std::string check;
  Verdict verdict = Verdict::holds;
  BigInt margin = 0;
  std::string detail;
  std::optional<nlohmann::json> witness;
};

struct Task {
  std::string check;  // names the task; records may carry other names
  int n = 0;
  int t = 0;
  int k = 0;
  std::function<std::vector<Outcome>(Rng&)> run;
};

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "averaging_identity",   "binom_swap",           "coefficient_chain",  "complement_lemma",
      "construction_AB",      "construction_layers",  "cycle_weight_bound", "down_shift",
      "erdos_bound",          "fill_full_weight",     "frankl_bound",       "frankl_odd_conjecture",
      "g_function_lower",     "inequalities",         "interval_shadow",    "katona_shadow",
      "main_even_oracle",     "make_consecutive_weight", "milner_bound",    "normalize_band",
      "odd_small_oracle",     "rearrangement_dominance", "shade_expansion", "sperner_bound",
      "sperner_shadow",       "up_compress",
  };
  return names;
}

/// Accumulates a per-trial margin, keeping the minimum and the first failure.
struct Tally {
  explicit Tally(std::string name) : check(std::move(name)) {}

  std::string check;
  bool any = false;
  bool failed = false;
  BigInt margin = 0;
  std::string detail;
  std::optional<nlohmann::json> witness;

  void observe(const BigInt& m, bool ok, const std::function<nlohmann::json()>& make_witness, std::string what = {}) {
    if (!any || m < margin) margin = m;
    any = true;
    if (!ok && !failed) {
      failed = true;
      witness = make_witness();
      detail = std::move(what);
    }
  }

  Outcome finish(const std::string& note = {}) const {
    Outcome o{check, Verdict::holds, margin, note, std::nullopt};
    if (!any) {
      o.verdict = Verdict::skipped_precondition;
      o.margin = 0;
      if (o.detail.empty()) o.detail = "no applicable instance";
    } else if (failed) {
      o.verdict = Verdict::violated;
      o.detail = detail.empty() ? note : detail;
      o.witness = witness;
    }
    return o;
  }
};

Outcome skipped(const std::string& check, std::string why) {
  return {check, Verdict::skipped_precondition, 0, std::move(why), std::nullopt};
}

nlohmann::json interval_witness(const IntervalFamily& g) {
  nlohmann::json j;
  j["n"] = g.n();
  j["intervals"] = nlohmann::json::array();
  for (const auto& iv : g.members()) j["intervals"].push_back({iv.start, iv.len});
  return j;
}

SearchResult oracle(const ScanConfig& cfg, const Params& p, std::optional<int> intersection = std::nullopt) {
  SearchSpec spec{p};
  spec.budget = cfg.budget;
  spec.intersection = intersection;
  return max_family(spec);
}

Outcome oracle_outcome(const std::string& check, const SearchResult& r, const BigInt& expected, bool exact,
                       const std::string& what) {
  Outcome o{check, Verdict::holds, 0, what + " best=" + std::to_string(r.best_size), std::nullopt};
  if (!r.proven_optimal) {
    o.verdict = Verdict::budget_exceeded;
    o.margin = expected - r.best_size;
    return o;
  }
  o.margin = expected - r.best_size;
  const bool ok = exact ? o.margin == 0 : o.margin >= 0;
  if (!ok) {
    o.verdict = Verdict::violated;
    o.witness = family_to_json(r.witness);
  }
  return o;
}

// ---- exact-search checks ----

std::vector<Outcome> main_even_oracle(const ScanConfig& cfg, const Params& p) {
  if (!p.even_case()) return {skipped("main_even_oracle", "n + t odd")};
  if (p.t() >= p.n()) return {skipped("main_even_oracle", "requires n > t")};
  const auto r = oracle(cfg, p);
  return {oracle_outcome("main_even_oracle", r, even_case_bound(p), true, "bound=" + to_string(even_case_bound(p)))};
}

std::vector<Outcome> odd_small_oracle(const ScanConfig& cfg, const Params& p) {
  if (p.even_case()) return {skipped("odd_small_oracle", "n + t even")};
  if (p.t() >= p.n()) return {skipped("odd_small_oracle", "requires n > t")};
  const auto r = oracle(cfg, p);
  const BigInt a = count_A(p);
  const BigInt b = count_B(p);
  const BigInt best_construction = std::max(a, b);
  Outcome o{"odd_small_oracle", Verdict::holds, BigInt(r.best_size) - best_construction,
            "best=" + std::to_string(r.best_size) + " |A|=" + to_string(a) + " |B|=" + to_string(b), std::nullopt};
  if (!r.proven_optimal) {
    o.verdict = r.best_size >= best_construction ? Verdict::holds : Verdict::budget_exceeded;
  } else if (o.margin < 0) {
    o.verdict = Verdict::violated;
    o.witness = family_to_json(r.witness);
  }
  return {o};
}

std::vector<Outcome> frankl_odd_conjecture(const ScanConfig& cfg, const Params& p) {
  if (p.even_case()) return {skipped("frankl_odd_conjecture", "n + t even")};
  if (p.t() >= p.n()) return {skipped("frankl_odd_conjecture", "requires n > t")};
  const auto r = oracle(cfg, p);
  const auto g = g_function(p, cfg.budget);
  const int base = (p.n() + p.t() - 1) / 2;
  BigInt rhs = g.value;
  for (int i = 1; i <= p.k(); ++i) rhs += binomial(p.n(), base + i);
  Outcome o{"frankl_odd_conjecture", Verdict::holds, rhs - r.best_size,
            "best=" + std::to_string(r.best_size) + " g=" + std::to_string(g.value), std::nullopt};
  if (!r.proven_optimal || !g.proven_optimal) {
    o.verdict = Verdict::budget_exceeded;
  } else if (o.margin < 0) {
    o.verdict = Verdict::violated;
    o.witness = family_to_json(r.witness);
  }
  return {o};
}

std::vector<Outcome> g_function_lower(const ScanConfig& cfg, const Params& p) {
  if (p.even_case()) return {skipped("g_function_lower", "n + t even")};
  if (p.n() > 9) return {skipped("g_function_lower", "n > 9")};
  const int n = p.n();
  const int base = (n + p.t() - 1) / 2;
  std::vector<Mask> core;
  for_each_subset_of_size(full_mask(n), base, [&](Mask m) {
    if (is_subset(full_mask(p.t()), m)) core.push_back(m);
  });
  const Family core_family(n, core);
  const long long lower = g_objective(core_family, base + p.k());
  const auto g = g_function(p, cfg.budget);
  Outcome o{"g_function_lower", Verdict::holds, BigInt(g.value - lower),
            "g=" + std::to_string(g.value) + " core=" + std::to_string(lower), std::nullopt};
  if (o.margin < 0) {
    o.verdict = Verdict::violated;
    o.witness = family_to_json(core_family);
  } else if (!g.proven_optimal) {
    o.verdict = Verdict::budget_exceeded;
  }
  return {o};
}

std::vector<Outcome> classical(const ScanConfig& cfg, const std::string& check, int n, int t, int k) {
  const Params p(n, std::max(1, t), k);
  if (check == "sperner_bound") return {oracle_outcome(check, oracle(cfg, p, 0), sperner_bound(n), true, "")};
  if (check == "erdos_bound") return {oracle_outcome(check, oracle(cfg, p, 0), erdos_bound(n, k), true, "")};
  if (check == "milner_bound") return {oracle_outcome(check, oracle(cfg, p, t), milner_bound(n, t), true, "")};
  return {oracle_outcome(check, oracle(cfg, p, 1), frankl_bound(n, k), true, "")};
}

// ---- constructions ----

std::vector<Outcome> construction_layers(const Params& p) {
  if (!p.even_case()) return {skipped("construction_layers", "n + t odd")};
  const Family f = construct_layers(p);
  const bool ok = is_t_intersecting(f, p.t()) && is_k_sperner(f, p.k()) && BigInt(f.size()) == even_case_bound(p);
  Outcome o{"construction_layers", ok ? Verdict::holds : Verdict::violated, even_case_bound(p) - f.size(),
            "size=" + std::to_string(f.size()), std::nullopt};
  if (!ok) o.witness = family_to_json(f);
  return {o};
}

std::vector<Outcome> construction_AB(const Params& p) {
  if (p.even_case()) return {skipped("construction_AB", "n + t even")};
  const Family a = construct_A(p);
  const Family b = construct_B(p);
  const BigInt closed = odd_case_closed_form(p);
  const bool ok = is_t_intersecting(a, p.t()) && is_k_sperner(a, p.k()) && is_t_intersecting(b, p.t()) &&
                  is_k_sperner(b, p.k()) && BigInt(a.size()) == count_A(p) && BigInt(b.size()) == count_B(p) &&
                  BigInt(b.size()) == closed;
  Outcome o{"construction_AB", ok ? Verdict::holds : Verdict::violated, BigInt(b.size()) - BigInt(a.size()),
            "|A|=" + std::to_string(a.size()) + " |B|=" + std::to_string(b.size()) + " closed=" + to_string(closed),
            std::nullopt};
  if (!ok) o.witness = nlohmann::json{{"A", family_to_json(a)}, {"B", family_to_json(b)}};
  return {o};
}

// ---- randomized family checks ----

std::vector<Outcome> katona_shadow(const ScanConfig& cfg, int n, int t, Rng& rng) {
  Tally tally{"katona_shadow"};
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const int r = static_cast<int>(uniform_int(rng, t, n));
    const Family f = random_uniform_t_intersecting(n, r, t, rng);
    if (f.empty()) continue;
    const int level = static_cast<int>(uniform_int(rng, std::max(0, r - t), r));
    const auto rep = verify_katona_shadow(f, r, t, level);
    // Integer slack: |shadow| - rhs, truncated.
    const Rational diff = Rational(static_cast<long long>(rep.shadow_size)) - rep.rhs;
    const BigInt slack = boost::multiprecision::numerator(diff) / boost::multiprecision::denominator(diff);
    tally.observe(slack, rep.holds, [&] { return family_to_json(f); }, "level=" + std::to_string(level));
  }
  return {tally.finish()};
}

std::vector<Outcome> compression_checks(const ScanConfig& cfg, const Params& p, Rng& rng) {
  Tally expand{"shade_expansion"}, up{"up_compress"}, down{"down_shift"}, band{"normalize_band"};
  const int t = p.t();
  const int k = p.k();
  const int limit = (p.n() + t - 1) / 2;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const Family f = random_valid_family(p, rng);
    auto wit = [&] { return family_to_json(f); };
    for (int i = std::max(0, f.min_size()); i <= limit && f.min_size() >= 0; ++i) {
      const auto layer = f.layer(i);
      if (layer.empty()) continue;
      const Family fi(p.n(), std::vector<Mask>(layer.begin(), layer.end()));
      const long long grow =
          static_cast<long long>(shade(fi, i + 1).size()) - static_cast<long long>(fi.size());
      expand.observe(grow, shade_expansion_holds(f, p, i), wit, "i=" + std::to_string(i));
    }
    try {
      const auto u = up_compress(f, p);
      const bool ok = is_t_intersecting(u.family, t) && is_k_sperner(u.family, k) && u.family.size() >= f.size() &&
                      (u.family.empty() || u.family.min_size() >= up_compress_floor(p));
      up.observe(BigInt(u.family.size()) - BigInt(f.size()), ok, wit);
    } catch (const BugTrap& e) {
      up.observe(-1, false, wit, e.what());
    }
    try {
      const auto d = down_shift(f, p);
      const bool ok = is_t_intersecting(d.family, t) && is_k_sperner(d.family, k) && d.family.size() >= f.size();
      down.observe(BigInt(d.family.size()) - BigInt(f.size()), ok, wit);
    } catch (const BugTrap& e) {
      down.observe(-1, false, wit, e.what());
    }
    try {
      const auto nz = normalize(f, p);
      const int m = nz.report.m;
      const bool ok = m <= k - 1 && within_band(nz.family, p, m) && is_t_intersecting(nz.family, t) &&
                      is_k_sperner(nz.family, k) && nz.family.size() >= f.size();
      band.observe(k - 1 - m, ok, wit);
    } catch (const BugTrap& e) {
      band.observe(-1, false, wit, e.what());
    }
  }
  const std::string note = p.even_case() ? "" : "odd parity extension";
  return {expand.finish(note), up.finish(note), down.finish(note), band.finish(note)};
}

std::vector<Outcome> sperner_shadow(const ScanConfig& cfg, int n, Rng& rng) {
  Tally tally{"sperner_shadow"};
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const Family f = random_antichain_above_middle(n, rng);
    if (f.empty()) continue;
    for (int j = n / 2; j <= f.min_size(); ++j) {
      const long long grow = static_cast<long long>(shadow(f, j).size()) - static_cast<long long>(f.size());
      tally.observe(grow, sperner_shadow_holds(f, j), [&] { return family_to_json(f); }, "j=" + std::to_string(j));
    }
  }
  return {tally.finish()};
}

std::vector<Outcome> averaging(const ScanConfig& cfg, int n, Rng& rng) {
  Tally tally{"averaging_identity"};
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const Family f = random_family(n, 1, n - 1, rng, 2 * n);
    const auto cmp = averaging_identity(f);
    tally.observe(cmp.rhs - cmp.lhs, cmp.holds, [&] { return family_to_json(f); });
  }
  return {tally.finish()};
}

// ---- cycle method ----

std::vector<Outcome> cycle_checks(const ScanConfig& cfg, const Params& p, int m, Rng& rng) {
  const std::string tag = "m=" + std::to_string(m);
  std::vector<std::string> names{"make_consecutive_weight", "fill_full_weight", "complement_lemma",
                                 "inequalities",            "interval_shadow",  "cycle_weight_bound",
                                 "coefficient_chain"};
  if (!p.even_case() || p.n() < min_cycle_n(p.t(), p.k(), m)) {
    std::vector<Outcome> out;
    for (const auto& name : names)
      out.push_back(skipped(name, tag + (p.even_case() ? " n below minimum cycle length" : " n + t odd")));
    return out;
  }
  Tally mc{"make_consecutive_weight"}, ff{"fill_full_weight"}, cl{"complement_lemma"}, iq{"inequalities"},
      sh{"interval_shadow"}, wb{"cycle_weight_bound"}, cc{"coefficient_chain"};
  int profiles = 0, below_threshold = 0;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const auto inst = random_full_consecutive(p, m, rng);
    if (!inst) continue;
    auto wit = [&] {
      auto j = interval_witness(inst->raw);
      j["consecutive"] = interval_witness(inst->consecutive)["intervals"];
      j["full"] = interval_witness(inst->full)["intervals"];
      return j;
    };
    const BigInt w_raw = weight(inst->raw);
    const BigInt w_con = weight(inst->consecutive);
    const BigInt w_full = weight(inst->full);
    mc.observe(w_con - w_raw, w_con >= w_raw && is_consecutive(inst->consecutive), wit);
    ff.observe(w_full - w_con, w_full >= w_con && is_full_consecutive(inst->full, p.k()), wit);
    const auto comp = check_complement_lemma(inst->full, p);
    cl.observe(comp.holds ? 0 : -1, comp.holds, wit, comp.witness);
    const auto ineq = check_inequalities(inst->full, p);
    std::int64_t slack = 0;
    bool first = true;
    for (const auto& c : ineq.inequalities) {
      if (first || c.rhs - c.lhs < slack) slack = c.rhs - c.lhs;
      first = false;
    }
    iq.observe(slack, ineq.all_hold(), wit);
    for (int len = 2; len <= p.n() - 1; ++len) {
      std::vector<Interval> layer;
      for (const auto& iv : inst->raw.members())
        if (iv.len == len) layer.push_back(iv);
      if (layer.empty()) continue;
      const IntervalFamily g(inst->raw.perm(), layer);
      const long long grow = static_cast<long long>(interval_shadow(g).size()) - static_cast<long long>(g.size());
      sh.observe(grow, grow >= 0, [&] { return interval_witness(g); });
    }
    const auto wb_cmp = check_weight_bound(inst->full, p);
    wb.observe(wb_cmp.rhs - wb_cmp.lhs, wb_cmp.holds, wit);
    const auto chain = run_coefficient_chain(ineq.profile);
    cc.observe(chain.bound - chain.w_gdoubleprime, chain.all_hold(), wit, chain.failures());
    profiles += 1;
    below_threshold += chain.large_n ? 0 : 1;
  }
  std::string cc_note = tag;
  if (below_threshold > 0)
    cc_note += " " + std::to_string(below_threshold) + "/" + std::to_string(profiles) +
               " profiles below large-n threshold " + std::to_string(push_threshold(p.t(), p.k(), m));
  std::string wb_note = tag;
  if (m > 0 && p.n() < push_threshold(p.t(), p.k(), m))
    wb_note += " n below large-n threshold " + std::to_string(push_threshold(p.t(), p.k(), m));
  return {mc.finish(tag), ff.finish(tag), cl.finish(tag), iq.finish(tag),
          sh.finish(tag), wb.finish(wb_note), cc.finish(cc_note)};
}

// ---- binomial facts ----

std::vector<Outcome> binom_swap_check() {
  constexpr std::int64_t kNMax = 10000;
  Outcome o{"binom_swap", Verdict::holds, 0, "", std::nullopt};
  std::int64_t worst = 0;
  std::ostringstream d;
  for (int b = 1; b <= 6; ++b) {
    for (int a = 0; a < b; ++a) {
      const auto n0 = minimal_n0(a, b, kNMax);
      if (!n0) {
        o.verdict = Verdict::violated;
        o.witness = nlohmann::json{{"a", a}, {"b", b}, {"n_max", kNMax}};
        o.detail = "no n0 for a=" + std::to_string(a) + " b=" + std::to_string(b);
        return {o};
      }
      worst = std::max(worst, *n0);
    }
  }
  o.margin = kNMax - worst;
  o.detail = "largest n0=" + std::to_string(worst);
  return {o};
}

std::vector<Outcome> rearrangement(const ScanConfig& cfg, Rng& rng) {
  Tally tally{"rearrangement_dominance"};
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const int len = static_cast<int>(uniform_int(rng, 1, 8));
    std::vector<BigInt> b(static_cast<std::size_t>(len)), a, d(static_cast<std::size_t>(len));
    for (auto& x : b) x = uniform_int(rng, 0, 20);
    a = b;
    // Moving mass toward lower indices keeps the totals and shrinks suffix sums.
    const int moves = static_cast<int>(uniform_int(rng, 0, 2 * len));
    for (int mv = 0; mv < moves && len > 1; ++mv) {
      const auto i = static_cast<std::size_t>(uniform_int(rng, 1, len - 1));
      const auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(i) - 1));
      const auto amount = uniform_int(rng, 0, static_cast<std::int64_t>(a[i]));
      a[i] -= amount;
      a[j] += amount;
    }
    std::int64_t top = uniform_int(rng, 0, 1000);
    for (auto& x : d) {
      x = top;
      top = uniform_int(rng, 0, top);
    }
    const auto r = rearrangement_dominance(a, b, d);
    tally.observe(r.difference, r.holds, [&] {
      nlohmann::json j;
      for (std::size_t i = 0; i < a.size(); ++i) {
        j["a"].push_back(to_string(a[i]));
        j["b"].push_back(to_string(b[i]));
        j["d"].push_back(to_string(d[i]));
      }
      return j;
    });
  }
  return {tally.finish()};
}

void validate(const ScanConfig& c) {
  auto check_range = [](const IntRange& r, int min, int max, const char* name) {
    if (r.lo > r.hi) throw PreconditionError(std::string("scan: empty range for ") + name);
    if (r.lo < min || r.hi > max) {
      throw PreconditionError(std::string("scan: ") + name + " range must lie in [" + std::to_string(min) + ", " +
                              std::to_string(max) + "]");
    }
  };
  check_range(c.oracle_n, 1, 9, "oracle n");
  check_range(c.property_n, 1, kMaxEnumerationN, "property n");
  check_range(c.cycle_n, 3, kMaxCycleN, "cycle n");
  check_range(c.t, 1, kMaxCycleN, "t");
  check_range(c.k, 1, kMaxCycleN, "k");
  if (c.trials < 1) throw PreconditionError("scan: trials must be >= 1");
  for (const auto& name : c.only) {
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end()) {
      throw PreconditionError("scan: unknown check '" + name + "'");
    }
  }
}

bool selected(const ScanConfig& c, std::initializer_list<const char*> names) {
  if (c.only.empty()) return true;
  for (const char* n : names)
    if (std::find(c.only.begin(), c.only.end(), n) != c.only.end()) return true;
  return false;
}

std::vector<Task> plan(const ScanConfig& cfg) {
  std::vector<Task> tasks;
  auto add = [&](std::string check, int n, int t, int k, std::function<std::vector<Outcome>(Rng&)> fn) {
    tasks.push_back({std::move(check), n, t, k, std::move(fn)});
  };
  for (int n = cfg.oracle_n.lo; n <= cfg.oracle_n.hi; ++n) {
    for (int t = cfg.t.lo; t <= std::min(cfg.t.hi, n); ++t) {
      for (int k = cfg.k.lo; k <= cfg.k.hi; ++k) {
        const Params p(n, t, k);
        if (selected(cfg, {"main_even_oracle"}))
          add("main_even_oracle", n, t, k, [&cfg, p](Rng&) { return main_even_oracle(cfg, p); });
        if (selected(cfg, {"odd_small_oracle"}))
          add("odd_small_oracle", n, t, k, [&cfg, p](Rng&) { return odd_small_oracle(cfg, p); });
        if (selected(cfg, {"frankl_odd_conjecture"}))
          add("frankl_odd_conjecture", n, t, k, [&cfg, p](Rng&) { return frankl_odd_conjecture(cfg, p); });
        if (selected(cfg, {"g_function_lower"}))
          add("g_function_lower", n, t, k, [&cfg, p](Rng&) { return g_function_lower(cfg, p); });
      }
    }
    for (int k = cfg.k.lo; k <= cfg.k.hi; ++k) {
      if (k == 1 && selected(cfg, {"sperner_bound"}))
        add("sperner_bound", n, 0, 1, [&cfg, n](Rng&) { return classical(cfg, "sperner_bound", n, 0, 1); });
      if (selected(cfg, {"erdos_bound"}))
        add("erdos_bound", n, 0, k, [&cfg, n, k](Rng&) { return classical(cfg, "erdos_bound", n, 0, k); });
      if (selected(cfg, {"frankl_bound"}))
        add("frankl_bound", n, 1, k, [&cfg, n, k](Rng&) { return classical(cfg, "frankl_bound", n, 1, k); });
    }
    for (int t = cfg.t.lo; t <= std::min(cfg.t.hi, n); ++t) {
      if (selected(cfg, {"milner_bound"}))
        add("milner_bound", n, t, 1, [&cfg, n, t](Rng&) { return classical(cfg, "milner_bound", n, t, 1); });
    }
  }
  for (int n = cfg.property_n.lo; n <= cfg.property_n.hi; ++n) {
    for (int t = cfg.t.lo; t <= std::min(cfg.t.hi, n); ++t) {
      if (selected(cfg, {"katona_shadow"}))
        add("katona_shadow", n, t, 0, [&cfg, n, t](Rng& rng) { return katona_shadow(cfg, n, t, rng); });
      for (int k = cfg.k.lo; k <= cfg.k.hi; ++k) {
        const Params p(n, t, k);
        if (selected(cfg, {"construction_layers"}))
          add("construction_layers", n, t, k, [p](Rng&) { return construction_layers(p); });
        if (selected(cfg, {"construction_AB"}))
          add("construction_AB", n, t, k, [p](Rng&) { return construction_AB(p); });
        if (selected(cfg, {"shade_expansion", "up_compress", "down_shift", "normalize_band"}))
          add("compression", n, t, k, [&cfg, p](Rng& rng) { return compression_checks(cfg, p, rng); });
      }
    }
    if (selected(cfg, {"sperner_shadow"}))
      add("sperner_shadow", n, 0, 0, [&cfg, n](Rng& rng) { return sperner_shadow(cfg, n, rng); });
    if (n >= 2 && n <= 7 && selected(cfg, {"averaging_identity"}))
      add("averaging_identity", n, 0, 0, [&cfg, n](Rng& rng) { return averaging(cfg, n, rng); });
  }
  if (selected(cfg, {"make_consecutive_weight", "fill_full_weight", "complement_lemma", "inequalities",
                     "interval_shadow", "cycle_weight_bound", "coefficient_chain"})) {
    for (int n = cfg.cycle_n.lo; n <= cfg.cycle_n.hi; ++n) {
      for (int t = cfg.t.lo; t <= std::min(cfg.t.hi, n - 1); ++t) {
        if ((n + t) % 2) continue;
        for (int k = cfg.k.lo; k <= cfg.k.hi; ++k) {
          const Params p(n, t, k);
          for (int m = 0; m < k; ++m) {
            if (n < min_cycle_n(t, k, m)) continue;
            add("cycle.m" + std::to_string(m), n, t, k,
                [&cfg, p, m](Rng& rng) { return cycle_checks(cfg, p, m, rng); });
          }
        }
      }
    }
  }
  if (selected(cfg, {"binom_swap"})) add("binom_swap", 0, 0, 0, [](Rng&) { return binom_swap_check(); });
  if (selected(cfg, {"rearrangement_dominance"}))
    add("rearrangement_dominance", 0, 0, 0, [&cfg](Rng& rng) { return rearrangement(cfg, rng); });
  if (cfg.inject_failure) {
    add("injected_failure", 0, 0, 0, [](Rng&) {
      return std::vector<Outcome>{
          {"injected_failure", Verdict::violated, -1, "fixture", nlohmann::json{{"fixture", true}}}};
    });
  }
  return tasks;
}

std::string slug(const std::string& s) {
  std::string out;
  for (char c : s) out += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  return out;
}

}  // namespace

std::vector<std::string> scan_check_names() { return check_names(); }

std::vector<ScanRecord> run_scan(const ScanConfig& config) {
  validate(config);
  const auto tasks = plan(config);
  std::vector<std::vector<ScanRecord>> results(tasks.size());

  auto run_task = [&](std::size_t i) {
    const Task& task = tasks[i];
    Rng rng(derive_seed(config.seed, task.check, task.n, task.t, task.k));
    const auto start = std::chrono::steady_clock::now();
    std::vector<Outcome> outs;
    try {
      outs = task.run(rng);
    } catch (const PreconditionError& e) {
      outs = {skipped(task.check, e.what())};
    } catch (const BugTrap& e) {
      outs = {{task.check, Verdict::violated, -1, e.what(), nlohmann::json{{"bug_trap", e.what()}}}};
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    for (auto& o : outs) {
      if (!config.only.empty() &&
          std::find(config.only.begin(), config.only.end(), o.check) == config.only.end() &&
          o.check != "injected_failure")
        continue;
      ScanRecord r{task.n, task.t, task.k, o.check, o.verdict, o.margin, "", took.count(), o.detail};
      if (r.verdict == Verdict::violated) {
        std::filesystem::create_directories(config.witness_dir);
        std::string name = slug(o.check) + "_" + std::to_string(task.n) + "_" + std::to_string(task.t) + "_" +
                           std::to_string(task.k);
        if (!o.detail.empty()) name += "_" + slug(o.detail.substr(0, 24));
        const auto path = config.witness_dir / (name + ".json");
        std::ofstream(path) << (o.witness ? *o.witness : nlohmann::json{{"detail", o.detail}}).dump(2) << "\n";
        r.witness_path = path.string();
      }
      results[i].push_back(std::move(r));
    }
  };

  int threads = config.threads > 0 ? config.threads
                                   : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::mutex error_mu;
  std::exception_ptr error;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++) {
        try {
          run_task(i);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  std::vector<ScanRecord> records;
  for (auto& rs : results)
    for (auto& r : rs) records.push_back(std::move(r));
  std::sort(records.begin(), records.end(), [](const ScanRecord& a, const ScanRecord& b) {
    return std::tie(a.check, a.n, a.t, a.k, a.detail) < std::tie(b.check, b.n, b.t, b.k, b.detail);
  });
  return records;
}

bool any_violated(const std::vector<ScanRecord>& records) {
  return std::any_of(records.begin(), records.end(), [](const auto& r) { return r.verdict == Verdict::violated; });
}

nlohmann::json scan_to_json(const std::vector<ScanRecord>& records, bool timings) {
  nlohmann::json summary{{"holds", 0}, {"violated", 0}, {"skipped-precondition", 0}, {"budget-exceeded", 0}};
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : records) {
    summary[to_string(r.verdict)] = summary[to_string(r.verdict)].get<int>() + 1;
    nlohmann::json j{{"check", r.check},
                     {"n", r.n},
                     {"t", r.t},
                     {"k", r.k},
                     {"verdict", to_string(r.verdict)},
                     {"margin", to_string(r.margin)},
                     {"witness_path", r.witness_path},
                     {"detail", r.detail}};
    if (timings) j["runtime_secs"] = r.runtime_secs;
    rows.push_back(std::move(j));
  }
  return nlohmann::json{{"summary", summary}, {"records", rows}};
}

std::string scan_to_csv(const std::vector<ScanRecord>& records, bool timings) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  std::ostringstream out;
  out << "check,n,t,k,verdict,margin,witness_path,detail" << (timings ? ",runtime_secs" : "") << "\n";
  for (const auto& r : records) {
    out << quote(r.check) << ',' << r.n << ',' << r.t << ',' << r.k << ',' << to_string(r.verdict) << ','
        << to_string(r.margin) << ',' << quote(r.witness_path) << ',' << quote(r.detail);
    if (timings) out << ',' << r.runtime_secs;
    out << "\n";
  }
  return out.str();
}

}  // namespace spernerlab
