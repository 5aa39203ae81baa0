#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace spernerlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact C(n, r). Zero when r < 0 or r > n. Requires n >= 0.
BigInt binomial(std::int64_t n, std::int64_t r);

/// Row of binomials C(n, 0..n), computed by the multiplicative recurrence.
std::vector<BigInt> binomial_row(std::int64_t n);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

}  // namespace spernerlab
