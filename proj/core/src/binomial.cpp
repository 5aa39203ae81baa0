#include "spernerlab/binomial.hpp"

#include <vector>

#include "spernerlab/errors.hpp"

namespace spernerlab {

BigInt binomial(std::int64_t n, std::int64_t r) {
  if (n < 0) throw PreconditionError("binomial: n must be non-negative");
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt result = 1;
  for (std::int64_t i = 0; i < r; ++i) {
    result *= (n - i);
    result /= (i + 1);
  }
  return result;
}

std::vector<BigInt> binomial_row(std::int64_t n) {
  if (n < 0) throw PreconditionError("binomial_row: n must be non-negative");
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    row[static_cast<std::size_t>(i + 1)] = row[static_cast<std::size_t>(i)] * (n - i) / (i + 1);
  }
  return row;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace spernerlab
