#pragma once

#include <string>
#include <vector>

#include "spernerlab/binomial.hpp"
#include "spernerlab/params.hpp"

namespace spernerlab {

/// C(n, floor(n/2)): largest antichain.
BigInt sperner_bound(int n);
/// Sum of the k largest layers: largest k-Sperner family.
BigInt erdos_bound(int n, int k);
/// C(n, floor((n + t + 1)/2)): largest t-intersecting antichain.
BigInt milner_bound(int n, int t);
/// Largest intersecting k-Sperner family, both parities of n.
BigInt frankl_bound(int n, int k);
/// sum_{i<k} C(n, (n + t)/2 + i). Requires n + t even.
BigInt even_case_bound(const Params& params);
/// C(n-t, (n-t-1)/2) + sum_{i=1}^k C(n, (n+t-1)/2 + i) - C(n-t, (n-t-1)/2 + k).
/// Requires n + t odd.
BigInt odd_case_closed_form(const Params& params);

struct BoundEntry {
  std::string name;
  BigInt value;
  /// Whether the statement covers the given (n, t, k) as stated.
  bool applies = false;
  std::string note;
};

struct BoundReport {
  Params params;
  std::vector<BoundEntry> entries;
  const BoundEntry* find(const std::string& name) const;
};

/// Every named bound and construction size for (n, t, k).
BoundReport bounds_table(const Params& params);

}  // namespace spernerlab
