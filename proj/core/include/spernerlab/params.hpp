#pragma once

#include <string>

namespace spernerlab {

/// Largest ground set accepted by operations that enumerate subsets.
inline constexpr int kMaxEnumerationN = 24;
/// Largest ground set accepted by closed-form bound evaluation.
inline constexpr int kMaxFormulaN = 10000;

/// The triple (n, t, k): ground set [n], intersection threshold t, and the
/// forbidden chain length k + 1. Validated on construction.
class Params {
 public:
  /// Throws PreconditionError unless 1 <= t <= n <= kMaxFormulaN and k >= 1.
  Params(int n, int t, int k);

  int n() const { return n_; }
  int t() const { return t_; }
  int k() const { return k_; }

  bool even_case() const { return (n_ + t_) % 2 == 0; }
  /// ceil((n + t) / 2): the lowest layer a pair of sets can occupy while
  /// being forced to t-intersect. Equals (n + t) / 2 in the even case.
  int middle() const { return (n_ + t_ + 1) / 2; }
  /// floor((n + t) / 2).
  int middle_floor() const { return (n_ + t_) / 2; }

  /// Throws PreconditionError if n exceeds kMaxEnumerationN.
  void require_enumerable(const char* op) const;
  /// Throws PreconditionError if n + t is odd.
  void require_even(const char* op) const;
  /// Throws PreconditionError if n + t is even.
  void require_odd(const char* op) const;

  std::string str() const;

  friend bool operator==(const Params&, const Params&) = default;

 private:
  int n_;
  int t_;
  int k_;
};

}  // namespace spernerlab
