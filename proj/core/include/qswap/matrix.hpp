#pragma once

#include "qswap/scalar.hpp"

#include <cstddef>
#include <vector>

namespace qswap {

/// Dense square matrix of exact scalars.
class ScalarMatrix {
  public:
    explicit ScalarMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

    std::size_t dim() const { return dim_; }
    Scalar& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

  private:
    std::size_t dim_;
    std::vector<Scalar> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
Scalar determinant(const ScalarMatrix& m);

inline constexpr std::size_t kDefaultPermanentBound = 20;

/// Exact permanent via Ryser's inclusion-exclusion with Gray-code subset
/// iteration, O(2^n * n) scalar operations. `bound` guards against
/// accidentally exponential jobs; exceeding it throws std::length_error.
Scalar permanent(const ScalarMatrix& m, std::size_t bound = kDefaultPermanentBound);

}  // namespace qswap
