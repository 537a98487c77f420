#include "qswap/matrix.hpp"

#include <stdexcept>

namespace qswap {

Scalar determinant(const ScalarMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) return Scalar(1);
    ScalarMatrix a = m;
    int sign = 1;
    Scalar prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            std::size_t pivot = k;
            while (pivot < n && a.at(pivot, k).is_zero()) ++pivot;
            if (pivot == n) return Scalar(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            }
            a.at(i, k) = Scalar(0);
        }
        prev = a.at(k, k);
    }
    Scalar det = a.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

Scalar permanent(const ScalarMatrix& m, std::size_t bound) {
    const std::size_t n = m.dim();
    if (n > bound) {
        throw std::length_error("permanent: matrix dimension exceeds cost bound");
    }
    if (n == 0) return Scalar(1);
    // Ryser: perm(A) = (-1)^n sum_{S != empty} (-1)^|S| prod_i sum_{j in S} a_ij.
    std::vector<Scalar> row_sum(n);
    Scalar total(0);
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::uint64_t gray_prev = 0;
    int subset_parity = 1;  // (-1)^|S|, updated per toggle
    for (std::uint64_t s = 1; s < subsets; ++s) {
        std::uint64_t gray = s ^ (s >> 1);
        std::uint64_t toggled = gray ^ gray_prev;
        std::size_t col = 0;
        while (!(toggled & (std::uint64_t{1} << col))) ++col;
        if (gray & toggled) {
            for (std::size_t i = 0; i < n; ++i) row_sum[i] += m.at(i, col);
        } else {
            for (std::size_t i = 0; i < n; ++i) row_sum[i] -= m.at(i, col);
        }
        subset_parity = -subset_parity;
        Scalar prod(1);
        for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) prod *= row_sum[i];
        if (subset_parity > 0) {
            total += prod;
        } else {
            total -= prod;
        }
        gray_prev = gray;
    }
    return (n % 2 == 0) ? total : -total;
}

}  // namespace qswap
