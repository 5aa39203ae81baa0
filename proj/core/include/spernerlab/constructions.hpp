#pragma once

#include <optional>

#include "spernerlab/binomial.hpp"
#include "spernerlab/family.hpp"
#include "spernerlab/params.hpp"

namespace spernerlab {

/// Union of layers (n + t)/2 .. (n + t)/2 + k - 1. Requires n + t even.
Family construct_layers(const Params& params);

/// With L = (n + t - 1)/2, n + t odd:
///   A = {F in layer L : n not in F} u layers L + 1 .. L + k - 1.
Family construct_A(const Params& params);
///   B = {F in layer L : [1, t] subset of F} u layers L + 1 .. L + k - 1
///       u {F in layer L + k : [1, t] not a subset of F}.
Family construct_B(const Params& params);

/// Member counts of A and B obtained by classifying sets by how they meet the
/// distinguished elements, without materializing the families.
BigInt count_A(const Params& params);
BigInt count_B(const Params& params);

/// Smallest N with n + t odd such that |B| > |A| for every admissible n in
/// [N, n_max]; nullopt if |B| <= |A| at the largest admissible n.
std::optional<int> b_beats_a_from(int t, int k, int n_max);

}  // namespace spernerlab
