// spernerlab: command-line front end.
//
// Exit codes: 0 all checks hold, 1 a violation was found, 2 usage or parse
// error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "spernerlab/bounds.hpp"
#include "spernerlab/cache.hpp"
#include "spernerlab/coefficients.hpp"
#include "spernerlab/compression.hpp"
#include "spernerlab/constructions.hpp"
#include "spernerlab/errors.hpp"
#include "spernerlab/family_io.hpp"
#include "spernerlab/scan.hpp"
#include "spernerlab/search.hpp"

namespace sl = spernerlab;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

sl::IntRange parse_range(const std::string& text, const char* flag) {
  sl::IntRange r;
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, colon));
      r.hi = std::stoi(text.substr(colon + 1));
    }
  } catch (const std::exception&) {
    throw sl::ParseError(std::string(flag) + ": expected N or LO:HI, got '" + text + "'");
  }
  if (r.lo > r.hi) throw sl::ParseError(std::string(flag) + ": empty range '" + text + "'");
  return r;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  if (!f) throw sl::ParseError("cannot write " + out);
  f << text;
}

struct Common {
  int n = 0;
  int t = 1;
  int k = 1;
};

void add_params(CLI::App* cmd, Common& c, bool need_n = true) {
  auto* n = cmd->add_option("--n", c.n, "ground set size");
  if (need_n) n->required();
  cmd->add_option("--t", c.t, "intersection threshold")->required();
  cmd->add_option("--k", c.k, "longest allowed chain")->required();
}

json property_report(const sl::Family& fam, const sl::Params& p) {
  const auto profile = fam.layer_profile();
  const int min_size = fam.min_size();
  const int m = min_size < 0 ? 0 : std::max(0, p.middle() - min_size);
  return json{{"n", fam.n()},
              {"t", p.t()},
              {"k", p.k()},
              {"size", fam.size()},
              {"is_t_intersecting", sl::is_t_intersecting(fam, p.t())},
              {"longest_chain", sl::longest_chain(fam)},
              {"is_k_sperner", sl::is_k_sperner(fam, p.k())},
              {"layer_profile", profile},
              {"weight", sl::to_string(sl::weight(fam))},
              {"band_m", m},
              {"in_band", sl::within_band(fam, p, m) && m <= p.k() - 1}};
}

int cmd_check(const std::string& file, const Common& c, const std::string& out) {
  const sl::Family fam = sl::read_family_file(file);
  const sl::Params p(fam.n(), c.t, c.k);
  emit(property_report(fam, p).dump(2) + "\n", out);
  return kOk;
}

int cmd_compress(const std::string& file, const Common& c, const std::string& out) {
  const sl::Family fam = sl::read_family_file(file);
  const sl::Params p(fam.n(), c.t, c.k);
  if (!sl::is_t_intersecting(fam, p.t()) || !sl::is_k_sperner(fam, p.k())) {
    throw sl::PreconditionError("compress: input must be t-intersecting and k-Sperner");
  }
  const auto r = sl::normalize(fam, p);
  json steps = json::array();
  for (const auto& s : r.report.steps)
    steps.push_back({{"op", s.op}, {"level", s.level}, {"before", s.before}, {"after", s.after}});
  const json j{{"input_size", fam.size()},
               {"output_size", r.family.size()},
               {"m", r.report.m},
               {"c", r.report.c},
               {"band", {r.report.band_min, r.report.band_max}},
               {"odd_parity_extension", r.report.odd_parity_extension},
               {"steps", steps},
               {"family", sl::family_to_json(r.family)}};
  emit(j.dump(2) + "\n", out);
  return kOk;
}

json coeff_vector_json(const sl::CoeffVector& v) { return json{{"lo", v.lo}, {"values", v.values}}; }

// Profiles are objects {"n", "t", "k", "m", "counts"} with counts g_{-m} .. g_{k+m-1}.
int cmd_coeff_profiles(const std::string& file, const std::string& out) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw sl::ParseError("cannot read " + file);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw sl::ParseError(file + ": " + e.what());
  }
  if (!doc.is_array()) throw sl::ParseError(file + ": expected a JSON array of profiles");
  json verdicts = json::array();
  bool violated = false;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& item = doc[i];
    sl::GProfile g;
    try {
      g.n = item.at("n").get<int>();
      g.t = item.at("t").get<int>();
      g.k = item.at("k").get<int>();
      g.m = item.at("m").get<int>();
      g.counts = item.at("counts").get<std::vector<std::int64_t>>();
    } catch (const json::exception& e) {
      throw sl::ParseError(file + ": profile " + std::to_string(i) + ": " + e.what());
    }
    json v{{"index", i}, {"n", g.n}, {"t", g.t}, {"k", g.k}, {"m", g.m}};
    try {
      if (g.m < 0 || g.m >= g.k || g.counts.size() != static_cast<std::size_t>(g.k + 2 * g.m))
        throw sl::PreconditionError("counts must list g_{-m} .. g_{k+m-1} with 0 <= m < k");
      const auto r = sl::run_coefficient_chain(g);
      const bool ok = r.all_hold();
      violated = violated || !ok;
      v["verdict"] = ok ? "holds" : "violated";
      v["failures"] = r.failures();
      v["large_n"] = r.large_n;
      v["push_threshold"] = g.m == 0 ? 0 : sl::push_threshold(g.t, g.k, g.m);
      v["g"] = coeff_vector_json(r.g);
      v["gprime"] = coeff_vector_json(r.gprime);
      v["gdoubleprime"] = coeff_vector_json(r.gdoubleprime);
      v["w_g"] = sl::to_string(r.w_g);
      v["w_gprime"] = sl::to_string(r.w_gprime);
      v["w_gdoubleprime"] = sl::to_string(r.w_gdoubleprime);
      v["bound"] = sl::to_string(r.bound);
    } catch (const sl::PreconditionError& e) {
      v["verdict"] = "skipped-precondition";
      v["failures"] = e.what();
    } catch (const sl::BugTrap& e) {
      violated = true;
      v["verdict"] = "violated";
      v["failures"] = e.what();
    }
    verdicts.push_back(std::move(v));
  }
  emit(verdicts.dump(2) + "\n", out);
  return violated ? kViolation : kOk;
}

int cmd_construct(const Common& c, const std::string& which, const std::string& out) {
  const sl::Params p(c.n, c.t, c.k);
  sl::Family f(c.n);
  if (which == "layers") {
    f = sl::construct_layers(p);
  } else if (which == "A") {
    f = sl::construct_A(p);
  } else if (which == "B") {
    f = sl::construct_B(p);
  } else {
    throw sl::ParseError("construct: --which must be layers, A or B");
  }
  emit(sl::format_family(f) + "\n", out);
  return kOk;
}

int cmd_bounds(const Common& c, const std::string& format, const std::string& out) {
  const auto report = sl::bounds_table(sl::Params(c.n, c.t, c.k));
  if (format == "csv") {
    std::ostringstream s;
    s << "name,value,applies,note\n";
    for (const auto& e : report.entries)
      s << e.name << ',' << sl::to_string(e.value) << ',' << (e.applies ? "true" : "false") << ",\"" << e.note
        << "\"\n";
    emit(s.str(), out);
  } else {
    json rows = json::array();
    for (const auto& e : report.entries)
      rows.push_back({{"name", e.name}, {"value", sl::to_string(e.value)}, {"applies", e.applies}, {"note", e.note}});
    emit(json{{"n", c.n}, {"t", c.t}, {"k", c.k}, {"bounds", rows}}.dump(2) + "\n", out);
  }
  return kOk;
}

struct SearchArgs {
  std::string layers;
  bool use_compression = false;
  std::uint64_t budget_nodes = 0;
  double budget_secs = 0;
  int threads = 1;
  bool lower_bound = false;
  int intersection = -1;
};

int cmd_search(const Common& c, const SearchArgs& a, bool no_cache, const std::string& out) {
  sl::SearchSpec spec{sl::Params(c.n, c.t, c.k)};
  if (!a.layers.empty()) {
    const auto r = parse_range(a.layers, "--layers");
    spec.layer_window = std::make_pair(r.lo, r.hi);
  }
  spec.use_compression = a.use_compression;
  spec.budget = {a.budget_nodes, a.budget_secs};
  spec.threads = a.threads;
  spec.mode = a.lower_bound ? sl::SearchMode::lower_bound : sl::SearchMode::exact;
  if (a.intersection >= 0) spec.intersection = a.intersection;

  const json key_params{{"n", c.n},           {"t", c.t},
                        {"k", c.k},           {"layers", a.layers},
                        {"compression", a.use_compression}, {"nodes", a.budget_nodes},
                        {"secs", a.budget_secs}, {"mode", a.lower_bound},
                        {"intersection", a.intersection}};
  const sl::ResultCache cache(sl::default_cache_dir());
  const std::string key = sl::cache_key("search", key_params, 0);
  // Budget-truncated results depend on timing and are never cached.
  if (!no_cache) {
    if (auto hit = cache.load(key)) {
      emit(*hit, out);
      return kOk;
    }
  }
  const auto result = sl::max_family(spec);
  const std::string text = sl::search_result_to_json(spec, result).dump(2) + "\n";
  if (!no_cache && result.proven_optimal) cache.store(key, text);
  emit(text, out);
  return kOk;
}

struct ScanArgs {
  std::string oracle_n = "2:7";
  std::string property_n = "2:10";
  std::string cycle_n = "4:24";
  std::string t = "1:4";
  std::string k = "1:3";
  std::uint64_t seed = 1;
  int trials = 50;
  int threads = 0;
  double budget_secs = 60;
  std::string format = "json";
  std::string only;
  std::string witness_dir = "scan-witnesses";
  bool timings = false;
  bool inject_failure = false;
};

sl::ScanConfig scan_config(const ScanArgs& a) {
  sl::ScanConfig cfg;
  cfg.oracle_n = parse_range(a.oracle_n, "--oracle-n");
  cfg.property_n = parse_range(a.property_n, "--property-n");
  cfg.cycle_n = parse_range(a.cycle_n, "--cycle-n");
  cfg.t = parse_range(a.t, "--t");
  cfg.k = parse_range(a.k, "--k");
  cfg.seed = a.seed;
  cfg.trials = a.trials;
  cfg.threads = a.threads;
  cfg.budget = {0, a.budget_secs};
  cfg.witness_dir = a.witness_dir;
  cfg.inject_failure = a.inject_failure;
  std::stringstream names(a.only);
  for (std::string name; std::getline(names, name, ',');)
    if (!name.empty()) cfg.only.push_back(name);
  return cfg;
}

int run_scan_command(const sl::ScanConfig& cfg, const ScanArgs& a, bool no_cache, const std::string& out) {
  const json key_params{{"oracle_n", a.oracle_n}, {"property_n", a.property_n}, {"cycle_n", a.cycle_n},
                        {"t", a.t},               {"k", a.k},                   {"trials", a.trials},
                        {"budget_secs", a.budget_secs}, {"format", a.format},   {"only", a.only},
                        {"witness_dir", a.witness_dir}, {"inject", a.inject_failure}, {"command", "scan"}};
  const bool cacheable = !no_cache && !a.timings;
  const sl::ResultCache cache(sl::default_cache_dir());
  const std::string key = sl::cache_key("scan", key_params, a.seed);
  if (cacheable) {
    if (auto hit = cache.load(key)) {
      emit(*hit, out);
      // The verdict summary is the last thing a scan decides; re-derive it.
      const bool violated = a.format == "csv" ? hit->find(",violated,") != std::string::npos
                                              : json::parse(*hit)["summary"]["violated"].get<int>() > 0;
      return violated ? kViolation : kOk;
    }
  }
  const auto records = sl::run_scan(cfg);
  const std::string text =
      a.format == "csv" ? sl::scan_to_csv(records, a.timings) : sl::scan_to_json(records, a.timings).dump(2) + "\n";
  if (cacheable) cache.store(key, text);
  emit(text, out);
  return sl::any_violated(records) ? kViolation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spernerlab: exact laboratory for t-intersecting k-Sperner families"};
  app.set_version_flag("--version", std::string(sl::version()));
  app.require_subcommand(1);
  bool no_cache = false;
  std::string out;
  app.add_flag("--no-cache", no_cache, "bypass the result cache");

  Common common;
  std::string file;

  auto* check = app.add_subcommand("check", "report predicates of a family file");
  check->add_option("--file", file, "Family JSON")->required();
  check->add_option("--t", common.t, "intersection threshold")->required();
  check->add_option("--k", common.k, "longest allowed chain")->required();
  check->add_option("--out", out, "output path (default stdout)");

  auto* compress = app.add_subcommand("compress", "up-compress and down-shift a family into the band");
  compress->add_option("--file", file, "Family JSON")->required();
  compress->add_option("--t", common.t, "intersection threshold")->required();
  compress->add_option("--k", common.k, "longest allowed chain")->required();
  compress->add_option("--out", out, "output path (default stdout)");

  ScanArgs cyc;
  cyc.oracle_n = "1:1";
  cyc.property_n = "1:1";
  cyc.trials = 200;
  auto* cycle = app.add_subcommand("cycle-audit", "cycle-method checks on random full consecutive families");
  cycle->add_option("--n", cyc.cycle_n, "cycle lengths, N or LO:HI")->required();
  cycle->add_option("--t", cyc.t, "N or LO:HI")->required();
  cycle->add_option("--k", cyc.k, "N or LO:HI")->required();
  cycle->add_option("--seed", cyc.seed);
  cycle->add_option("--trials", cyc.trials);
  cycle->add_option("--threads", cyc.threads);
  cycle->add_option("--format", cyc.format)->check(CLI::IsMember({"json", "csv"}));
  cycle->add_option("--witness-dir", cyc.witness_dir);
  cycle->add_option("--out", out);

  ScanArgs coeff = cyc;
  std::string profiles_file;
  auto* coeff_cmd = app.add_subcommand("coeff-audit", "coefficient chain and binomial facts");
  auto* profiles_opt = coeff_cmd->add_option("--profiles", profiles_file, "JSON array of g-profiles to audit");
  coeff_cmd->add_option("--n", coeff.cycle_n, "cycle lengths, N or LO:HI")->excludes(profiles_opt);
  coeff_cmd->add_option("--t", coeff.t, "N or LO:HI")->excludes(profiles_opt);
  coeff_cmd->add_option("--k", coeff.k, "N or LO:HI")->excludes(profiles_opt);
  coeff_cmd->add_option("--seed", coeff.seed);
  coeff_cmd->add_option("--trials", coeff.trials);
  coeff_cmd->add_option("--threads", coeff.threads);
  coeff_cmd->add_option("--format", coeff.format)->check(CLI::IsMember({"json", "csv"}));
  coeff_cmd->add_option("--witness-dir", coeff.witness_dir);
  coeff_cmd->add_option("--out", out);

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "exact maximum family by branch-and-bound");
  add_params(search, common);
  search->add_option("--layers", sa.layers, "restrict member sizes to LO:HI");
  search->add_flag("--use-compression", sa.use_compression, "restrict to the compression band")
      ->excludes("--layers");
  search->add_option("--budget-nodes", sa.budget_nodes, "node limit (0 = none)");
  search->add_option("--budget-secs", sa.budget_secs, "wall-clock limit (0 = none)");
  search->add_option("--threads", sa.threads, "worker threads (0 = all cores)");
  search->add_option("--intersection", sa.intersection, "override the intersection threshold (0 = none)");
  search->add_flag("--lower-bound", sa.lower_bound, "never report the result as optimal");
  search->add_option("--out", out, "result JSON path")->required();

  std::string which;
  auto* construct = app.add_subcommand("construct", "write a construction as Family JSON");
  add_params(construct, common);
  construct->add_option("--which", which, "layers, A or B")->required();
  construct->add_option("--out", out);

  std::string format = "json";
  auto* bounds = app.add_subcommand("bounds", "every named bound for (n, t, k)");
  add_params(bounds, common);
  bounds->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  bounds->add_option("--out", out);

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "full regression matrix");
  scan->add_option("--oracle-n", scan_args.oracle_n, "ground sets for exact search");
  scan->add_option("--property-n", scan_args.property_n, "ground sets for randomized checks");
  scan->add_option("--cycle-n", scan_args.cycle_n, "cycle lengths");
  scan->add_option("--t", scan_args.t);
  scan->add_option("--k", scan_args.k);
  scan->add_option("--seed", scan_args.seed);
  scan->add_option("--trials", scan_args.trials);
  scan->add_option("--threads", scan_args.threads);
  scan->add_option("--budget-secs", scan_args.budget_secs, "per-search wall-clock limit");
  scan->add_option("--format", scan_args.format)->check(CLI::IsMember({"json", "csv"}));
  scan->add_option("--only", scan_args.only, "comma-separated check names");
  scan->add_option("--witness-dir", scan_args.witness_dir);
  scan->add_flag("--timings", scan_args.timings, "include per-record runtimes");
  scan->add_flag("--inject-failure", scan_args.inject_failure, "add a check that always fails");
  scan->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(file, common, out);
    if (*compress) return cmd_compress(file, common, out);
    if (*construct) return cmd_construct(common, which, out);
    if (*bounds) return cmd_bounds(common, format, out);
    if (*search) return cmd_search(common, sa, no_cache, out);
    if (*cycle) {
      auto cfg = scan_config(cyc);
      cfg.only = {"make_consecutive_weight", "fill_full_weight", "complement_lemma",  "inequalities",
                  "interval_shadow",         "cycle_weight_bound", "coefficient_chain"};
      return run_scan_command(cfg, cyc, true, out);
    }
    if (*coeff_cmd) {
      if (!profiles_file.empty()) return cmd_coeff_profiles(profiles_file, out);
      if (coeff_cmd->count("--n") == 0 || coeff_cmd->count("--t") == 0 || coeff_cmd->count("--k") == 0)
        throw sl::ParseError("coeff-audit: --n, --t and --k are required without --profiles");
      auto cfg = scan_config(coeff);
      cfg.only = {"coefficient_chain", "binom_swap", "rearrangement_dominance"};
      return run_scan_command(cfg, coeff, true, out);
    }
    if (*scan) return run_scan_command(scan_config(scan_args), scan_args, no_cache, out);
  } catch (const sl::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const sl::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const sl::BugTrap& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}
