#pragma once

#include "qswap/network.hpp"
#include "qswap/protocol.hpp"
#include "qswap/reference.hpp"
#include "qswap/state.hpp"

#include <random>
#include <vector>

namespace qswap::test {

inline constexpr Spin Dn = Spin::Down;
inline constexpr Spin Up = Spin::Up;

inline SingleParticleState loc(int node, Spin s) {
    return SingleParticleState::basis({node, s});
}

inline ProductKet ket_of(Statistics statistics, std::vector<SingleParticleState> ps) {
    return ProductKet{statistics, std::move(ps)};
}

inline ManyBodyState single_term(Statistics statistics,
                                 std::vector<SingleParticleState> ps,
                                 Scalar coeff = Scalar(1)) {
    ManyBodyState s(statistics, ps.size());
    s.add_term(ket_of(statistics, std::move(ps)), coeff);
    return s;
}

/// Amplitudes drawn from {0, 1/2, 1, 1/sqrt2}, the values the protocols use.
inline Scalar random_amplitude(std::mt19937_64& rng) {
    switch (rng() % 4) {
        case 0: return Scalar(0);
        case 1: return Scalar::rational(1, 2);
        case 2: return Scalar(1);
        default: return Scalar::sqrt2(1, 2);
    }
}

inline ScalarMatrix random_matrix(std::mt19937_64& rng, std::size_t dim) {
    ScalarMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = random_amplitude(rng);
    }
    return m;
}

/// Random nonzero single-particle state over `nodes` nodes.
inline SingleParticleState random_particle(std::mt19937_64& rng, int nodes) {
    SingleParticleState s;
    while (s.empty()) {
        for (int node = 0; node < nodes; ++node) {
            for (Spin spin : {Dn, Up}) {
                s.set_amplitude({node, spin}, random_amplitude(rng));
            }
        }
    }
    return s;
}

inline ProductKet random_product_ket(std::mt19937_64& rng, Statistics statistics,
                                     std::size_t particles, int nodes) {
    ProductKet ket{statistics, {}};
    for (std::size_t i = 0; i < particles; ++i) {
        ket.particles.push_back(random_particle(rng, nodes));
    }
    return ket;
}

/// n-particle amplitude by explicit permutation enumeration.
inline Scalar naive_inner_product(const ProductKet& bra, const ProductKet& ket) {
    return naive_permutation_sum(overlap_matrix(bra.particles, ket.particles),
                                 bra.statistics);
}

}  // namespace qswap::test
