#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spernerlab/binomial.hpp"
#include "spernerlab/search.hpp"

namespace spernerlab {

enum class Verdict { holds, violated, skipped_precondition, budget_exceeded };
const char* to_string(Verdict v);

struct ScanRecord {
  int n = 0;
  int t = 0;
  int k = 0;
  std::string check;
  Verdict verdict = Verdict::holds;
  /// Check-specific slack; nonnegative when the check holds.
  BigInt margin = 0;
  /// Set for every violated record.
  std::string witness_path;
  double runtime_secs = 0;
  std::string detail;
};

struct IntRange {
  int lo = 0;
  int hi = 0;
  bool contains(int v) const { return lo <= v && v <= hi; }
};

struct ScanConfig {
  /// Ground sets for exact-search checks.
  IntRange oracle_n{2, 7};
  /// Ground sets for randomized family checks.
  IntRange property_n{2, 10};
  /// Cycle lengths for interval-family checks.
  IntRange cycle_n{4, 24};
  IntRange t{1, 4};
  IntRange k{1, 3};
  std::uint64_t seed = 1;
  int trials = 50;
  /// Zero picks the hardware concurrency.
  int threads = 0;
  SearchBudget budget{0, 60};
  /// Violation witnesses are written here.
  std::filesystem::path witness_dir = "scan-witnesses";
  /// Run only these checks; empty runs all.
  std::vector<std::string> only;
  /// Adds a check that always reports a violation.
  bool inject_failure = false;
};

/// Every check name the scan knows, in output order.
std::vector<std::string> scan_check_names();

/// Runs the regression matrix. Records are sorted by (check, n, t, k, detail)
/// whatever order they complete in. Throws PreconditionError on empty or
/// out-of-range ranges and unknown check names.
std::vector<ScanRecord> run_scan(const ScanConfig& config);

bool any_violated(const std::vector<ScanRecord>& records);

/// Canonical JSON; runtimes only when `timings` is set so that reruns are
/// byte-identical.
nlohmann::json scan_to_json(const std::vector<ScanRecord>& records, bool timings = false);
/// CSV projection with a fixed header:
/// check,n,t,k,verdict,margin,witness_path,detail[,runtime_secs]
std::string scan_to_csv(const std::vector<ScanRecord>& records, bool timings = false);

/// Stable 64-bit seed for one check cell.
std::uint64_t derive_seed(std::uint64_t seed, const std::string& check, int n, int t, int k);

}  // namespace spernerlab
