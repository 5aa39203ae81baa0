#include "spernerlab/params.hpp"

#include "spernerlab/errors.hpp"

namespace spernerlab {

Params::Params(int n, int t, int k) : n_(n), t_(t), k_(k) {
  if (n < 1 || n > kMaxFormulaN)
    throw PreconditionError("Params: n must lie in [1, " + std::to_string(kMaxFormulaN) + "], got " +
                            std::to_string(n));
  if (t < 1 || t > n)
    throw PreconditionError("Params: t must lie in [1, n], got t=" + std::to_string(t) +
                            " n=" + std::to_string(n));
  if (k < 1) throw PreconditionError("Params: k must be positive, got " + std::to_string(k));
}

void Params::require_enumerable(const char* op) const {
  if (n_ > kMaxEnumerationN)
    throw PreconditionError(std::string(op) + ": n=" + std::to_string(n_) +
                            " exceeds the enumeration limit " + std::to_string(kMaxEnumerationN));
}

void Params::require_even(const char* op) const {
  if (!even_case())
    throw PreconditionError(std::string(op) + ": requires n + t even, got " + str());
}

void Params::require_odd(const char* op) const {
  if (even_case())
    throw PreconditionError(std::string(op) + ": requires n + t odd, got " + str());
}

std::string Params::str() const {
  return "(n=" + std::to_string(n_) + ", t=" + std::to_string(t_) + ", k=" + std::to_string(k_) + ")";
}

}  // namespace spernerlab
