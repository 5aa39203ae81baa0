#include "spernerlab/compression.hpp"

#include <algorithm>

#include "spernerlab/errors.hpp"

namespace spernerlab {

namespace {

void require_valid(const Family& fam, const Params& params, const char* op) {
  params.require_enumerable(op);
  if (fam.n() != params.n())
    throw PreconditionError(std::string(op) + ": family ground set n=" + std::to_string(fam.n()) +
                            " does not match " + params.str());
  if (!is_t_intersecting(fam, params.t()))
    throw PreconditionError(std::string(op) + ": family is not " + std::to_string(params.t()) + "-intersecting");
  if (!is_k_sperner(fam, params.k()))
    throw PreconditionError(std::string(op) + ": family contains a " + std::to_string(params.k() + 1) + "-chain");
}

Family as_family(int n, std::span<const Mask> members) {
  return Family(n, std::vector<Mask>(members.begin(), members.end()));
}

void fill_band(NormalizationReport& rep, const Family& fam, const Params& params) {
  rep.band_min = fam.min_size();
  rep.band_max = fam.max_size();
  rep.m = fam.empty() ? 0 : std::max(0, params.middle() - fam.min_size());
  rep.odd_parity_extension = !params.even_case();
}

}  // namespace

int up_compress_floor(const Params& params) { return params.middle() - (params.k() - 1); }

bool shade_expansion_holds(const Family& fam, const Params& params, int i) {
  if (!is_t_intersecting(fam, params.t()))
    throw PreconditionError("shade_expansion_holds: family is not " + std::to_string(params.t()) + "-intersecting");
  const int limit = (params.n() + params.t() - 1) / 2;
  if (i < 0 || i > limit)
    throw PreconditionError("shade_expansion_holds: i=" + std::to_string(i) + " outside [0, " +
                            std::to_string(limit) + "]");
  const Family layer = as_family(fam.n(), fam.layer(i));
  return shade(layer, i + 1).size() >= layer.size();
}

CompressionResult up_compress(const Family& fam, const Params& params) {
  require_valid(fam, params, "up_compress");
  const int n = params.n();
  const int floor_size = up_compress_floor(params);
  CompressionResult res{fam, {}};
  Family& cur = res.family;

  while (!cur.empty() && cur.min_size() < floor_size) {
    const int i = cur.min_size();
    const std::size_t before = cur.size();
    std::vector<Mask> lifted;
    Family h = as_family(n, cur.layer(i));
    const std::vector<Mask> removed(h.begin(), h.end());
    for (int j = i;; ++j) {
      if (j - i >= params.k())
        throw BugTrap("up_compress: H_" + std::to_string(j) + " is non-empty, so the input held a " +
                      std::to_string(params.k() + 1) + "-chain");
      Family up = shade(h, j + 1);
      if (up.size() < h.size())
        throw BugTrap("up_compress: shade of H_" + std::to_string(j) + " shrank (" + std::to_string(up.size()) +
                      " < " + std::to_string(h.size()) + ")");
      lifted.insert(lifted.end(), up.begin(), up.end());
      std::vector<Mask> next;
      for (Mask m : up)
        if (cur.contains(m)) next.push_back(m);
      if (next.empty()) break;
      h = Family(n, std::move(next));
    }
    cur = cur.without(removed).with(lifted);
    if (cur.size() < before)
      throw BugTrap("up_compress: lifting layer " + std::to_string(i) + " lost members (" +
                    std::to_string(before) + " -> " + std::to_string(cur.size()) + ")");
    res.report.steps.push_back({"up_compress", i, before, cur.size()});
  }
  fill_band(res.report, cur, params);
  return res;
}

bool sperner_shadow_holds(const Family& fam, int j) {
  if (fam.empty()) return true;
  if (!is_k_sperner(fam, 1)) throw PreconditionError("sperner_shadow_holds: family is not an antichain");
  const int n = fam.n();
  const int m = fam.min_size();
  if (2 * m <= n) throw PreconditionError("sperner_shadow_holds: min size " + std::to_string(m) + " is not above n/2");
  if (j < n / 2 || j > m)
    throw PreconditionError("sperner_shadow_holds: j=" + std::to_string(j) + " outside [floor(n/2), " +
                            std::to_string(m) + "]");
  return shadow(fam, j).size() >= fam.size();
}

CompressionResult down_shift(const Family& fam, const Params& params) {
  require_valid(fam, params, "down_shift");
  CompressionResult res{fam, {}};
  if (fam.empty()) {
    fill_band(res.report, fam, params);
    return res;
  }
  const int n = params.n();
  const int c = std::max(0, params.middle() - fam.min_size());
  const auto heights = chain_heights(fam);
  const auto members = fam.members();

  std::vector<Mask> all;
  std::size_t multiset_size = 0;
  for (int j = 1; j <= params.k(); ++j) {
    const int threshold = params.middle() + c + j - 1;
    std::vector<Mask> keep, high;
    for (std::size_t idx = 0; idx < members.size(); ++idx) {
      if (heights[idx] != j) continue;
      (cardinality(members[idx]) > threshold ? high : keep).push_back(members[idx]);
    }
    const Family high_fam(n, std::move(high));
    const Family pushed = shadow(high_fam, threshold);
    if (pushed.size() < high_fam.size())
      throw BugTrap("down_shift: shadow of the over-threshold part of F^" + std::to_string(j) + " shrank");
    multiset_size += keep.size() + pushed.size();
    all.insert(all.end(), keep.begin(), keep.end());
    all.insert(all.end(), pushed.begin(), pushed.end());
  }
  res.family = Family(n, std::move(all));
  if (res.family.size() != multiset_size)
    throw BugTrap("down_shift: the shifted antichains share " + std::to_string(multiset_size - res.family.size()) +
                  " set(s)");
  if (res.family.size() < fam.size()) throw BugTrap("down_shift: output is smaller than input");
  res.report.c = c;
  res.report.steps.push_back({"down_shift", params.middle() + c, fam.size(), res.family.size()});
  fill_band(res.report, res.family, params);
  return res;
}

bool within_band(const Family& fam, const Params& params, int m) {
  const int lo = params.middle() - m;
  const int hi = params.middle() + params.k() - 1 + m;
  return std::all_of(fam.begin(), fam.end(), [&](Mask s) {
    const int c = cardinality(s);
    return c >= lo && c <= hi;
  });
}

CompressionResult normalize(const Family& fam, const Params& params) {
  auto up = up_compress(fam, params);
  auto down = down_shift(up.family, params);
  CompressionResult res{std::move(down.family), {}};
  res.report.steps = std::move(up.report.steps);
  res.report.steps.insert(res.report.steps.end(), down.report.steps.begin(), down.report.steps.end());
  res.report.c = down.report.c;
  fill_band(res.report, res.family, params);
  if (res.report.m > params.k() - 1 || !within_band(res.family, params, res.report.m))
    throw BugTrap("normalize: output sizes [" + std::to_string(res.report.band_min) + ", " +
                  std::to_string(res.report.band_max) + "] escape the band for m=" + std::to_string(res.report.m));
  return res;
}

}  // namespace spernerlab
