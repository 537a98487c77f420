#pragma once

#include "qswap/matrix.hpp"
#include "qswap/network.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace qswap {

/// Naive O(n!) permutation-sum functional: sum_P eta^P prod_i m[i][P_i].
/// Independent oracle for determinant (eta = -1) and permanent (eta = +1);
/// deliberately written via explicit permutation enumeration so it shares no
/// code with the production kernels.
inline Scalar naive_permutation_sum(const ScalarMatrix& m, Statistics statistics) {
    const std::size_t n = m.dim();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Scalar total(0);
    do {
        Scalar prod(1);
        for (std::size_t i = 0; i < n; ++i) prod *= m.at(i, perm[i]);
        if (statistics == Statistics::Fermion) {
            // parity by counting inversions
            int inversions = 0;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (perm[i] > perm[j]) ++inversions;
                }
            }
            if (inversions % 2 != 0) prod = -prod;
        }
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace qswap
