#include "qswap/slocc.hpp"

#include <stdexcept>

namespace qswap {

namespace {

// Spin multisets of size `count` at one node, as canonical mode runs.
std::vector<std::vector<Mode>> node_multisets(int node, int count, Statistics statistics) {
    std::vector<std::vector<Mode>> out;
    if (statistics == Statistics::Fermion && count > 2) return out;  // Pauli-empty
    for (int ups = 0; ups <= count; ++ups) {
        if (statistics == Statistics::Fermion && (ups > 1 || count - ups > 1)) continue;
        std::vector<Mode> run;
        for (int i = 0; i < count - ups; ++i) run.push_back({node, Spin::Down});
        for (int i = 0; i < ups; ++i) run.push_back({node, Spin::Up});
        out.push_back(std::move(run));
    }
    return out;
}

}  // namespace

std::vector<BasisKet> enumerate_basis(const CountConfiguration& config,
                                      Statistics statistics,
                                      std::size_t particle_number) {
    if (config.total() != static_cast<int>(particle_number)) {
        throw std::invalid_argument("enumerate_basis: counts do not sum to particle number");
    }
    std::vector<std::vector<std::vector<Mode>>> per_node;
    for (const auto& [node, count] : config.counts) {
        per_node.push_back(node_multisets(node, count, statistics));
        if (per_node.back().empty()) return {};
    }
    std::vector<BasisKet> basis;
    std::vector<std::size_t> index(per_node.size(), 0);
    while (true) {
        std::vector<Mode> modes;
        modes.reserve(particle_number);
        for (std::size_t i = 0; i < per_node.size(); ++i) {
            const auto& run = per_node[i][index[i]];
            modes.insert(modes.end(), run.begin(), run.end());
        }
        basis.push_back({localized_ket(statistics, modes),
                         multiset_weight(modes, statistics)});
        std::size_t i = 0;
        for (; i < per_node.size(); ++i) {
            if (++index[i] < per_node[i].size()) break;
            index[i] = 0;
        }
        if (i == per_node.size()) break;
    }
    return basis;
}

ProjectionResult slocc_project(const ManyBodyState& state, const CountConfiguration& config) {
    if (config.total() != static_cast<int>(state.particle_number())) {
        throw std::invalid_argument("slocc_project: counts do not sum to particle number");
    }
    ManyBodyState expanded = expand_localized(state);
    Scalar m = norm_squared(expanded);
    if (m.is_zero()) throw std::domain_error("slocc_project: zero state");

    ManyBodyState projected(state.statistics(), state.particle_number());
    Scalar weight_sum(0);
    for (const auto& [ket, coeff] : expanded.terms()) {
        auto modes = localized_modes(ket);
        if (node_counts(*modes) != config.counts) continue;
        projected.add_term(ket, coeff);
        weight_sum += coeff * coeff * multiset_weight(*modes, state.statistics());
    }
    Scalar probability = weight_sum / m;
    if (projected.empty()) {
        return {Scalar(0), projected, Scalar(0), false};
    }
    // Global phase: canonically-first term coefficient non-negative.
    if (projected.terms().begin()->second.sign() < 0) {
        projected = projected.scaled(Scalar(-1));
    }
    auto norm = normalize(projected);
    return {probability, norm.state, norm.norm_squared, norm.normalized};
}

std::vector<CountConfiguration> all_configurations(std::size_t node_count, int n) {
    std::vector<CountConfiguration> out;
    CountConfiguration current;
    auto recurse = [&](auto&& self, std::size_t node, int remaining) -> void {
        if (node + 1 == node_count) {
            if (remaining > 0) current.counts[static_cast<int>(node)] = remaining;
            out.push_back(current);
            current.counts.erase(static_cast<int>(node));
            return;
        }
        for (int c = 0; c <= remaining; ++c) {
            if (c > 0) current.counts[static_cast<int>(node)] = c;
            self(self, node + 1, remaining - c);
            current.counts.erase(static_cast<int>(node));
        }
    };
    recurse(recurse, 0, n);
    return out;
}

}  // namespace qswap
