#pragma once

#include <string>
#include <vector>

#include "spernerlab/family.hpp"
#include "spernerlab/params.hpp"

namespace spernerlab {

struct NormalizationStep {
  std::string op;  // "up_compress" or "down_shift"
  int level = 0;   // layer lifted (up_compress) or threshold of the first antichain (down_shift)
  std::size_t before = 0;
  std::size_t after = 0;
};

struct NormalizationReport {
  /// Band half-width: middle - min size, clamped at 0.
  int m = 0;
  /// Down-shift parameter used.
  int c = 0;
  std::vector<NormalizationStep> steps;
  /// Smallest and largest member size of the output; -1 when empty.
  int band_min = -1;
  int band_max = -1;
  /// n + t odd: thresholds use ceil((n + t) / 2), which goes beyond what the
  /// even-case argument states explicitly.
  bool odd_parity_extension = false;
};

struct CompressionResult {
  Family family;
  NormalizationReport report;
};

/// ceil((n + t) / 2) - (k - 1): the minimum size up_compress lifts to.
int up_compress_floor(const Params& params);

/// |shade_{i+1}(F_i)| >= |F_i|. Requires fam t-intersecting and
/// i <= floor((n + t - 1) / 2); under those hypotheses a false return means
/// something is broken.
bool shade_expansion_holds(const Family& fam, const Params& params, int i);

/// Lifts the lowest layer until every member has size >= up_compress_floor.
/// Each round builds H_i = F_i, H_{j+1} = shade_{j+1}(H_j) cap F_{j+1} and
/// replaces F_i by the union of shade_{j+1}(H_j) over all j. Requires fam
/// t-intersecting and k-Sperner; throws BugTrap if a round loses members.
CompressionResult up_compress(const Family& fam, const Params& params);

/// |shadow_j(fam)| >= |fam| for an antichain with min size > n / 2 and
/// floor(n / 2) <= j <= min size.
bool sperner_shadow_holds(const Family& fam, int j);

/// Peels fam into antichains of minimal sets F^1..F^k and pushes members of
/// F^j above middle + c + j - 1 down to that level, where
/// c = max(0, middle - min size). Requires fam t-intersecting and k-Sperner.
CompressionResult down_shift(const Family& fam, const Params& params);

/// up_compress followed by down_shift. The output lies in
/// [middle - m, middle + k - 1 + m] with 0 <= m <= k - 1.
CompressionResult normalize(const Family& fam, const Params& params);

/// Whether every member size lies in [middle - m, middle + k - 1 + m].
bool within_band(const Family& fam, const Params& params, int m);

}  // namespace spernerlab
