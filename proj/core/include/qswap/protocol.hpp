#pragma once

#include "qswap/bell.hpp"
#include "qswap/slocc.hpp"

#include <cstdint>
#include <optional>

namespace qswap {

enum class Topology { SharedChain, Separated };

enum class ProtocolKind { FermionicShared, BosonicShared, Separated };

std::string to_string(ProtocolKind kind);
std::optional<ProtocolKind> protocol_kind_from_string(const std::string& name);

struct NetworkSpec {
    int pairs;  // N >= 2; n = 2N particles
    Topology topology;
    Statistics statistics;
};

Network make_network(const NetworkSpec& spec);

/// Gram matrix M^(n) of single-particle overlaps among the 2N prepared
/// states, in the basis (a_1 down, a_1 up, ..., a_N down, a_N up).
ScalarMatrix gram_matrix(const NetworkSpec& spec);

/// The prepared n-particle state: each pair j occupies the delocalized mode
/// a_j with opposite pseudospins. Normalized via det/perm of the Gram matrix;
/// Pauli-forbidden content vanishes in the antisymmetric algebra on its own.
/// `pair_spins` overrides the (down, up) assignment per pair, for degenerate
/// negative controls.
WeightedState prepare_state(
    const NetworkSpec& spec,
    const std::vector<std::pair<Spin, Spin>>& pair_spins = {});

/// The count configuration post-selected by each protocol: one particle in
/// every endpoint/separated node, two in every shared intermediate node.
CountConfiguration post_selection_counts(const NetworkSpec& spec, const Network& net);

/// One leaf of the cascaded measurement tree.
struct BranchOutcome {
    std::vector<std::pair<std::string, BellLabel>> outcome_sequence;
    Scalar branch_probability;  // conditional on successful post-selection
    BellLabel final_ab_label;
    WeightedState final_ab_state;
};

struct ProtocolRun {
    NetworkSpec spec;
    Network network;
    Scalar success_probability;  // = post-selection probability; all branches succeed
    ProjectionResult projection;
    std::vector<BranchOutcome> branches;
};

/// Fermionic shared-node chain: sLOCC leaves |M_i up, M_i down> in every
/// intermediate node and the Psi- Bell state across A and B with no Bell
/// measurement (the single branch has probability 1).
ProtocolRun run_fermionic_transfer(int pairs);

/// Bosonic shared-node chain: sLOCC, then cascaded Bell measurements on
/// M_1..M_k; every branch ends with A,B in a Bell state.
ProtocolRun run_bosonic_cascade(int pairs);

/// Separated-node swap for either statistics: sLOCC to one particle per
/// node, then Bell measurements on successive (C_i, D_i) pairs.
ProtocolRun run_separated_swap(int pairs, Statistics statistics);

/// Samples one leaf from the enumerated branch distribution with a seeded
/// deterministic generator and exact rational comparisons.
const BranchOutcome& sample_branch(const ProtocolRun& run, std::uint64_t seed);

/// Closed-form success probabilities:
///   separated:        1 / 2^(n/2)
///   fermionic shared: 1 / (2^(n-1) det M^(n))
///   bosonic shared:   3^(n/2-1) / (2^(n-1) perm M^(n))
/// Throws for odd n or n < 4. `permanent_bound` guards the bosonic kernel.
Scalar closed_form_probability(ProtocolKind kind, int n,
                               std::size_t permanent_bound = kDefaultPermanentBound);

}  // namespace qswap
