#pragma once

#include "qswap/state.hpp"

#include <map>

namespace qswap {

/// Per-node particle counts defining an sLOCC projection.
struct CountConfiguration {
    std::map<int, int> counts;  // node rank -> count, zero entries omitted

    int total() const {
        int sum = 0;
        for (const auto& [node, c] : counts) sum += c;
        return sum;
    }

    static CountConfiguration of(const Network& net,
                                 const std::map<std::string, int>& by_name) {
        CountConfiguration cfg;
        for (const auto& [name, c] : by_name) {
            if (c > 0) cfg.counts[net.rank(name)] = c;
        }
        return cfg;
    }

    friend bool operator==(const CountConfiguration&, const CountConfiguration&) = default;
};

/// Spanning ket of the count-consistent subspace together with its exact
/// squared norm. Kets with repeated bosonic modes are stored unnormalized;
/// dividing by sqrt(weight) recovers the orthonormal basis element whenever
/// that root exists in the field (it does for all per-node counts <= 2).
struct BasisKet {
    ProductKet ket;
    Scalar weight;  // <ket|ket>
};

/// All canonical localized kets with the given per-node counts: per node,
/// every spin multiset of the right size allowed by the statistics (fermions
/// admit no repeated spin, so any fermionic node count > 2 yields an empty
/// basis). Throws if the totals disagree with `particle_number`.
std::vector<BasisKet> enumerate_basis(const CountConfiguration& config,
                                      Statistics statistics,
                                      std::size_t particle_number);

struct ProjectionResult {
    Scalar probability;
    ManyBodyState post_state;
    Scalar post_norm_squared;  // 1 when `normalized`
    bool normalized = false;
};

/// Projects onto the count configuration: probability = <Psi|Pi|Psi> / <Psi|Psi>
/// exactly; the post-selected state is renormalized when possible and its
/// global phase fixed so the canonically-first term has a positive
/// coefficient. A zero-probability configuration returns an empty result.
ProjectionResult slocc_project(const ManyBodyState& state, const CountConfiguration& config);

/// All count configurations over `nodes` summing to n (for completeness sweeps).
std::vector<CountConfiguration> all_configurations(std::size_t node_count, int n);

}  // namespace qswap
