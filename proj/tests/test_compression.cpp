#include <gtest/gtest.h>

#include "spernerlab/compression.hpp"
#include "spernerlab/constructions.hpp"
#include "spernerlab/errors.hpp"
#include "spernerlab/generators.hpp"

using namespace spernerlab;

namespace {

bool valid(const Family& f, const Params& p) { return is_t_intersecting(f, p.t()) && is_k_sperner(f, p.k()); }

}  // namespace

TEST(ShadeExpansion, Examples) {
  const Params p(6, 2, 1);
  EXPECT_TRUE(shade_expansion_holds(Family(6), p, 3));
  EXPECT_TRUE(shade_expansion_holds(Family::from_sets(6, {{1, 2, 3}}), p, 3));
  EXPECT_THROW(shade_expansion_holds(Family(6), p, 4), PreconditionError);
}

TEST(ShadeExpansion, FullLayersBelowMiddle) {
  // A full layer below (n + t)/2 is not t-intersecting, so only the raw size inequality applies.
  for (int n = 3; n <= 10; ++n)
    for (int i = 0; 2 * i + 1 <= n; ++i)
        EXPECT_GE(shade(Family::full_layer(n, i), i + 1).size(), Family::full_layer(n, i).size()) << n << " " << i;
  EXPECT_THROW(shade_expansion_holds(Family::full_layer(6, 2), Params(6, 1, 1), 2), PreconditionError);
}

TEST(UpCompress, Examples) {
  const Params p(6, 2, 1);
  const auto r = up_compress(Family::from_sets(6, {{1, 2, 3}}), p);
  EXPECT_EQ(r.family, Family::from_sets(6, {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 3, 6}}));
  const Family high = construct_layers(Params(6, 2, 2));
  EXPECT_EQ(up_compress(high, Params(6, 2, 2)).family, high);
}

TEST(UpCompress, RejectsInvalidInput) {
  EXPECT_THROW(up_compress(Family::from_sets(4, {{1}, {2}}), Params(4, 1, 1)), PreconditionError);
  EXPECT_THROW(up_compress(Family::from_sets(4, {{1}, {1, 2}}), Params(4, 1, 1)), PreconditionError);
}

TEST(SpernerShadow, Examples) {
  EXPECT_TRUE(sperner_shadow_holds(Family::from_sets(5, {{1, 2, 3, 4}}), 3));
  EXPECT_TRUE(sperner_shadow_holds(Family::full_layer(5, 4), 2));
  EXPECT_THROW(sperner_shadow_holds(Family::full_layer(5, 4), 1), PreconditionError);
  EXPECT_THROW(sperner_shadow_holds(Family::full_layer(6, 3), 3), PreconditionError);
}

TEST(SpernerShadow, RandomAntichains) {
  Rng rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(uniform_int(rng, 2, 10));
    const Family f = random_antichain_above_middle(n, rng);
    if (f.empty()) continue;
    ASSERT_EQ(longest_chain(f), 1);
    for (int j = n / 2; j <= f.min_size(); ++j) ASSERT_TRUE(sperner_shadow_holds(f, j)) << f.str() << " j=" << j;
  }
}

TEST(DownShift, Examples) {
  const Params p(6, 2, 2);
  const Family band = construct_layers(p);
  EXPECT_EQ(down_shift(band, p).family, band);
}

TEST(DownShift, PushesOversizedMembers) {
  // middle 4, k = 1, c = 0: the 6-set drops to layer 4 as its shadow.
  const Params p(6, 2, 1);
  const auto r = down_shift(Family(6, {full_mask(6)}), p);
  EXPECT_EQ(r.family, Family::full_layer(6, 4));
  EXPECT_EQ(r.report.c, 0);
}

TEST(Normalize, LayersUnchanged) {
  for (auto [n, t, k] : {std::tuple{6, 2, 2}, {7, 1, 3}, {8, 2, 1}}) {
    const Params p(n, t, k);
    const Family f = construct_layers(p);
    const auto r = normalize(f, p);
    EXPECT_EQ(r.family, f);
    EXPECT_EQ(r.report.m, 0);
  }
}

TEST(Compression, RandomFamilyProperties) {
  Rng rng(37);
  int checked = 0;
  for (int n = 2; n <= 10; ++n) {
    for (int trial = 0; trial < 1000; ++trial) {
      const int t = static_cast<int>(uniform_int(rng, 1, std::min(n, 4)));
      const int k = static_cast<int>(uniform_int(rng, 1, 3));
      const Params p(n, t, k);
      const Family f = random_valid_family(p, rng);
      ASSERT_TRUE(valid(f, p));
      if (f.empty()) continue;
      const auto up = up_compress(f, p);
      ASSERT_TRUE(valid(up.family, p)) << f.str();
      ASSERT_GE(up.family.size(), f.size());
      ASSERT_GE(up.family.min_size(), up_compress_floor(p));
      const auto down = down_shift(up.family, p);
      ASSERT_TRUE(valid(down.family, p)) << up.family.str();
      ASSERT_GE(down.family.size(), up.family.size());
      ASSERT_LE(down.family.min_size(), up.family.min_size());
      ASSERT_GE(down.family.min_size(), std::min(up.family.min_size(), p.middle()));
      const auto norm = normalize(f, p);
      ASSERT_EQ(norm.family, down.family);
      ASSERT_LE(norm.report.m, k - 1);
      ASSERT_TRUE(within_band(norm.family, p, norm.report.m)) << norm.family.str();
      ASSERT_EQ(norm.report.odd_parity_extension, !p.even_case());
      for (const auto& step : norm.report.steps) ASSERT_LE(step.before, step.after);
      ++checked;
    }
  }
  EXPECT_GT(checked, 8000);
}

TEST(Compression, ShadeExpansionOnRandomLayers) {
  Rng rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = static_cast<int>(uniform_int(rng, 3, 10));
    const int t = static_cast<int>(uniform_int(rng, 1, std::min(n - 1, 3)));
    const Params p(n, t, 1);
    const int i = static_cast<int>(uniform_int(rng, t, (n + t - 1) / 2));
    if (i < 1) continue;
    const Family f = random_uniform_t_intersecting(n, i, t, rng);
    ASSERT_TRUE(shade_expansion_holds(f, p, i)) << f.str();
  }
}
