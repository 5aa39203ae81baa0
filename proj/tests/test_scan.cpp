#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "spernerlab/cache.hpp"
#include "spernerlab/errors.hpp"
#include "spernerlab/scan.hpp"

using namespace spernerlab;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("spernerlab-test-" + name + "-" + std::to_string(std::random_device{}()));
  fs::remove_all(dir);
  return dir;
}

ScanConfig small_config(const fs::path& witnesses) {
  ScanConfig c;
  c.oracle_n = {2, 5};
  c.property_n = {2, 7};
  c.cycle_n = {4, 14};
  c.t = {2, 3};
  c.k = {1, 2};
  c.trials = 10;
  c.threads = 2;
  c.witness_dir = witnesses;
  return c;
}

}  // namespace

TEST(Scan, CheckNamesAreSortedAndUnique) {
  const auto names = scan_check_names();
  EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
  EXPECT_EQ(std::set<std::string>(names.begin(), names.end()).size(), names.size());
  EXPECT_GE(names.size(), 20u);
}

TEST(Scan, SmallMatrixHoldsAndIsDeterministic) {
  const auto dir = fresh_dir("scan");
  auto cfg = small_config(dir);
  const auto a = run_scan(cfg);
  EXPECT_FALSE(any_violated(a)) << scan_to_csv(a);
  cfg.threads = 1;
  const auto b = run_scan(cfg);
  EXPECT_EQ(scan_to_json(a).dump(), scan_to_json(b).dump());
  EXPECT_EQ(scan_to_csv(a), scan_to_csv(b));
  std::set<std::string> seen;
  for (const auto& r : a) seen.insert(r.check);
  for (const auto& name : scan_check_names()) EXPECT_TRUE(seen.count(name)) << name;
  fs::remove_all(dir);
}

TEST(Scan, SeedChangesRandomizedChecks) {
  EXPECT_NE(derive_seed(1, "up_compress", 6, 2, 2), derive_seed(2, "up_compress", 6, 2, 2));
  EXPECT_NE(derive_seed(1, "up_compress", 6, 2, 2), derive_seed(1, "down_shift", 6, 2, 2));
  EXPECT_EQ(derive_seed(1, "up_compress", 6, 2, 2), derive_seed(1, "up_compress", 6, 2, 2));
}

TEST(Scan, InjectedFailureCarriesWitness) {
  const auto dir = fresh_dir("inject");
  auto cfg = small_config(dir);
  cfg.only = {"binom_swap"};
  cfg.inject_failure = true;
  const auto records = run_scan(cfg);
  ASSERT_TRUE(any_violated(records));
  for (const auto& r : records) {
    if (r.verdict != Verdict::violated) continue;
    ASSERT_FALSE(r.witness_path.empty());
    EXPECT_TRUE(fs::exists(r.witness_path));
  }
  fs::remove_all(dir);
}

TEST(Scan, OnlyRestrictsRecords) {
  auto cfg = small_config(fresh_dir("only"));
  cfg.only = {"binom_swap", "rearrangement_dominance"};
  for (const auto& r : run_scan(cfg)) EXPECT_TRUE(r.check == "binom_swap" || r.check == "rearrangement_dominance");
  cfg.only = {"no_such_check"};
  EXPECT_THROW(run_scan(cfg), PreconditionError);
  cfg.only.clear();
  cfg.t = {3, 2};
  EXPECT_THROW(run_scan(cfg), PreconditionError);
}

TEST(Scan, CsvHeaderAndTimings) {
  auto cfg = small_config(fresh_dir("csv"));
  cfg.only = {"binom_swap"};
  const auto records = run_scan(cfg);
  const auto csv = scan_to_csv(records);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "check,n,t,k,verdict,margin,witness_path,detail");
  const auto timed = scan_to_csv(records, true);
  EXPECT_EQ(timed.substr(0, timed.find('\n')), "check,n,t,k,verdict,margin,witness_path,detail,runtime_secs");
  const auto j = scan_to_json(records);
  ASSERT_FALSE(j.empty());
  EXPECT_FALSE(j.dump().find("runtime") != std::string::npos);
  EXPECT_TRUE(scan_to_json(records, true).dump().find("runtime") != std::string::npos);
}

TEST(Cache, KeysAndRoundTrip) {
  const nlohmann::json p{{"n", 6}, {"t", 2}, {"k", 2}};
  const auto key = cache_key("search", p, 0);
  EXPECT_EQ(key.size(), 16u);
  EXPECT_EQ(key, cache_key("search", p, 0));
  EXPECT_NE(key, cache_key("search", p, 1));
  EXPECT_NE(key, cache_key("scan", p, 0));
  EXPECT_NE(key, cache_key("search", nlohmann::json{{"n", 7}, {"t", 2}, {"k", 2}}, 0));

  const auto dir = fresh_dir("cache");
  const ResultCache cache(dir);
  EXPECT_FALSE(cache.load(key).has_value());
  cache.store(key, "{\"best_size\":21}\n");
  ASSERT_TRUE(cache.load(key).has_value());
  EXPECT_EQ(*cache.load(key), "{\"best_size\":21}\n");
  fs::remove_all(dir);
}
