#include "spernerlab/bounds.hpp"

#include <algorithm>

#include "spernerlab/constructions.hpp"
#include "spernerlab/errors.hpp"

namespace spernerlab {

BigInt sperner_bound(int n) { return binomial(n, n / 2); }

BigInt erdos_bound(int n, int k) {
  auto row = binomial_row(n);
  std::sort(row.begin(), row.end(), std::greater<>());
  BigInt s = 0;
  for (int i = 0; i < k && i < static_cast<int>(row.size()); ++i) s += row[static_cast<std::size_t>(i)];
  return s;
}

BigInt milner_bound(int n, int t) { return binomial(n, (n + t + 1) / 2); }

BigInt frankl_bound(int n, int k) {
  BigInt s = 0;
  if (n % 2) {
    const int lo = (n + 1) / 2;
    for (int i = lo; i <= lo + k - 1; ++i) s += binomial(n, i);
    return s;
  }
  const int h = n / 2;
  s += binomial(n - 1, h - 1);
  for (int i = h + 1; i <= h + k - 1; ++i) s += binomial(n, i);
  s += binomial(n - 1, h + k);
  return s;
}

BigInt even_case_bound(const Params& params) {
  params.require_even("even_case_bound");
  BigInt s = 0;
  for (int i = 0; i < params.k(); ++i) s += binomial(params.n(), params.middle() + i);
  return s;
}

BigInt odd_case_closed_form(const Params& params) {
  params.require_odd("odd_case_closed_form");
  const int n = params.n();
  const int t = params.t();
  const int base = (n + t - 1) / 2;
  const int half = (n - t - 1) / 2;
  BigInt s = binomial(n - t, half);
  for (int i = 1; i <= params.k(); ++i) s += binomial(n, base + i);
  s -= binomial(n - t, half + params.k());
  return s;
}

const BoundEntry* BoundReport::find(const std::string& name) const {
  auto it = std::find_if(entries.begin(), entries.end(), [&](const BoundEntry& e) { return e.name == name; });
  return it == entries.end() ? nullptr : &*it;
}

BoundReport bounds_table(const Params& params) {
  const int n = params.n();
  const int t = params.t();
  const int k = params.k();
  BoundReport r{params, {}};
  r.entries.push_back({"sperner", sperner_bound(n), k == 1, "antichains, ignores t"});
  r.entries.push_back({"erdos", erdos_bound(n, k), true, "k-Sperner families, ignores t"});
  r.entries.push_back({"milner", milner_bound(n, t), k == 1, "t-intersecting antichains"});
  r.entries.push_back({"frankl", frankl_bound(n, k), t == 1, "intersecting k-Sperner families"});
  if (params.even_case()) {
    r.entries.push_back({"even_case", even_case_bound(params), n > t,
                         "t-intersecting k-Sperner, n + t even; proven for n large enough"});
  } else {
    r.entries.push_back({"odd_case_B", odd_case_closed_form(params), true,
                         "conjectured maximum for n + t odd and n large enough"});
    r.entries.push_back({"construction_A", count_A(params), true, "size of the alternative odd-case construction"});
    r.entries.push_back({"construction_B", count_B(params), true, "size of B counted from its definition"});
  }
  return r;
}

}  // namespace spernerlab
