#include "qswap/protocol.hpp"

#include <random>
#include <stdexcept>

namespace qswap {

namespace {

using boost::multiprecision::cpp_int;

// (left node, right node) of each pair's delocalized mode.
std::vector<std::pair<int, int>> pair_nodes(const NetworkSpec& spec) {
    std::vector<std::pair<int, int>> nodes;
    if (spec.topology == Topology::SharedChain) {
        for (int j = 0; j < spec.pairs; ++j) nodes.emplace_back(j, j + 1);
    } else {
        nodes.emplace_back(0, 1);
        for (int j = 1; j + 1 < spec.pairs; ++j) nodes.emplace_back(2 * j, 2 * j + 1);
        nodes.emplace_back(2 * spec.pairs - 2, 2 * spec.pairs - 1);
    }
    return nodes;
}

std::vector<SingleParticleState> prepared_particles(
    const NetworkSpec& spec, const std::vector<std::pair<Spin, Spin>>& pair_spins) {
    if (spec.pairs < 2) throw std::invalid_argument("prepare_state: need at least 2 pairs");
    if (!pair_spins.empty() && pair_spins.size() != static_cast<std::size_t>(spec.pairs)) {
        throw std::invalid_argument("prepare_state: pair_spins size mismatch");
    }
    std::vector<SingleParticleState> particles;
    auto nodes = pair_nodes(spec);
    for (int j = 0; j < spec.pairs; ++j) {
        auto [left, right] = nodes[j];
        auto [first, second] = pair_spins.empty()
                                   ? std::pair{Spin::Down, Spin::Up}
                                   : pair_spins[j];
        particles.push_back(SingleParticleState::delocalized(left, right, first));
        particles.push_back(SingleParticleState::delocalized(left, right, second));
    }
    return particles;
}

Scalar power_of_two(int k) { return Scalar(Rational(1, cpp_int(1) << k)); }

BellLabel find_ab_label(const WeightedState& ab, BellTarget target) {
    for (BellLabel label : bell_basis_labels(ab.state.statistics(), false)) {
        if (fidelity(ab, target, label) == Scalar(1)) return label;
    }
    throw std::runtime_error("cascade leaf is not a Bell state");
}

// Cascaded Bell measurements over `targets`, depth first, collecting leaves.
void cascade(const WeightedState& state, const Network& net,
             const std::vector<BellTarget>& targets, std::size_t level,
             std::vector<std::pair<std::string, BellLabel>>& prefix,
             const Scalar& prefix_probability, BellTarget ab,
             std::vector<BranchOutcome>& leaves) {
    if (level == targets.size()) {
        BellLabel label = find_ab_label(state, ab);
        leaves.push_back({prefix, prefix_probability, label, state});
        return;
    }
    BellTarget target = targets[level];
    std::string where = net.name(target.node_a);
    if (!target.same_node()) where += "," + net.name(target.node_b);
    for (const auto& outcome : bell_measure(state, target)) {
        prefix.emplace_back(where, outcome.label);
        cascade(outcome.residual, net, targets, level + 1, prefix,
                prefix_probability * outcome.probability, ab, leaves);
        prefix.pop_back();
    }
}

ProtocolRun run_cascaded(const NetworkSpec& spec) {
    Network net = make_network(spec);
    WeightedState prepared = prepare_state(spec);
    if (prepared.norm_squared.is_zero()) {
        throw std::domain_error("run: prepared state is Pauli-null");
    }
    ProjectionResult projection =
        slocc_project(prepared.state, post_selection_counts(spec, net));
    if (projection.probability.is_zero()) {
        throw std::domain_error("run: post-selection has zero probability");
    }

    std::vector<BellTarget> targets;
    if (spec.topology == Topology::SharedChain) {
        for (int i = 1; i < spec.pairs; ++i) targets.push_back(BellTarget::node(i));
    } else {
        for (int i = 1; i < spec.pairs; ++i) {
            targets.push_back(BellTarget::pair(2 * i - 1, 2 * i));
        }
    }
    BellTarget ab = BellTarget::pair(0, net.rank("B"));

    std::vector<BranchOutcome> leaves;
    std::vector<std::pair<std::string, BellLabel>> prefix;
    cascade({projection.post_state, projection.post_norm_squared}, net, targets, 0,
            prefix, Scalar(1), ab, leaves);
    return {spec, net, projection.probability, projection, std::move(leaves)};
}

}  // namespace

std::string to_string(ProtocolKind kind) {
    switch (kind) {
        case ProtocolKind::FermionicShared: return "fermionic_shared";
        case ProtocolKind::BosonicShared: return "bosonic_shared";
        case ProtocolKind::Separated: return "separated";
    }
    return "?";
}

std::optional<ProtocolKind> protocol_kind_from_string(const std::string& name) {
    if (name == "fermionic_shared") return ProtocolKind::FermionicShared;
    if (name == "bosonic_shared") return ProtocolKind::BosonicShared;
    if (name == "separated") return ProtocolKind::Separated;
    return std::nullopt;
}

Network make_network(const NetworkSpec& spec) {
    return spec.topology == Topology::SharedChain ? Network::shared_chain(spec.pairs)
                                                  : Network::separated(spec.pairs);
}

ScalarMatrix gram_matrix(const NetworkSpec& spec) {
    auto particles = prepared_particles(spec, {});
    return overlap_matrix(particles, particles);
}

WeightedState prepare_state(const NetworkSpec& spec,
                            const std::vector<std::pair<Spin, Spin>>& pair_spins) {
    auto particles = prepared_particles(spec, pair_spins);
    ProductKet ket{spec.statistics, particles};
    ManyBodyState state(spec.statistics, particles.size());
    state.add_term(ket, Scalar(1));
    Scalar n2 = inner_product(ket, ket);
    if (n2.is_zero()) return {state, Scalar(0)};
    auto result = normalize(state);
    return {result.state, result.norm_squared};
}

CountConfiguration post_selection_counts(const NetworkSpec& spec, const Network& net) {
    CountConfiguration cfg;
    if (spec.topology == Topology::SharedChain) {
        cfg.counts[0] = 1;
        for (int i = 1; i < spec.pairs; ++i) cfg.counts[i] = 2;
        cfg.counts[spec.pairs] = 1;
    } else {
        for (std::size_t i = 0; i < net.size(); ++i) cfg.counts[static_cast<int>(i)] = 1;
    }
    return cfg;
}

ProtocolRun run_fermionic_transfer(int pairs) {
    return run_cascaded({pairs, Topology::SharedChain, Statistics::Fermion});
}

ProtocolRun run_bosonic_cascade(int pairs) {
    return run_cascaded({pairs, Topology::SharedChain, Statistics::Boson});
}

ProtocolRun run_separated_swap(int pairs, Statistics statistics) {
    return run_cascaded({pairs, Topology::Separated, statistics});
}

const BranchOutcome& sample_branch(const ProtocolRun& run, std::uint64_t seed) {
    if (run.branches.empty()) throw std::domain_error("sample_branch: no branches");
    std::mt19937_64 rng(seed);
    Rational u(cpp_int(rng()), cpp_int(1) << 64);
    Scalar cumulative(0);
    for (const auto& branch : run.branches) {
        cumulative += branch.branch_probability;
        if ((cumulative - Scalar(Rational(u))).sign() > 0) return branch;
    }
    return run.branches.back();
}

Scalar closed_form_probability(ProtocolKind kind, int n, std::size_t permanent_bound) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("closed_form_probability: n must be even and >= 4");
    }
    const int pairs = n / 2;
    switch (kind) {
        case ProtocolKind::Separated:
            return power_of_two(pairs);
        case ProtocolKind::FermionicShared: {
            NetworkSpec spec{pairs, Topology::SharedChain, Statistics::Fermion};
            return power_of_two(n - 1) / determinant(gram_matrix(spec));
        }
        case ProtocolKind::BosonicShared: {
            NetworkSpec spec{pairs, Topology::SharedChain, Statistics::Boson};
            Scalar numerator(Rational(boost::multiprecision::pow(cpp_int(3), pairs - 1)));
            return numerator * power_of_two(n - 1) /
                   permanent(gram_matrix(spec), permanent_bound);
        }
    }
    throw std::invalid_argument("closed_form_probability: bad kind");
}

}  // namespace qswap
