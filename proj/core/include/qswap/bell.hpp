#pragma once

#include "qswap/state.hpp"

#include <string>
#include <vector>

namespace qswap {

/// Bell-basis labels. PsiPlus..PhiMinus name the four maximally entangled
/// states of a distinct-site pair; PsiM/PhiPlusM/PhiMinusM name the basis of
/// a doubly occupied bosonic node (fermions admit only PsiM there).
enum class BellLabel { PsiPlus, PsiMinus, PhiPlus, PhiMinus, PsiM, PhiPlusM, PhiMinusM };

std::string to_string(BellLabel label);

/// Two-particle measurement target: either one node holding two particles or
/// a pair of distinct nodes holding one particle each.
struct BellTarget {
    int node_a;
    int node_b;

    static BellTarget node(int n) { return {n, n}; }
    static BellTarget pair(int a, int b) { return {a, b}; }
    bool same_node() const { return node_a == node_b; }
};

/// The normalized Bell state for a label, as a canonical localized state.
ManyBodyState bell_state(Statistics statistics, BellTarget target, BellLabel label);

/// Complete Bell basis of the target subspace: four labels for a distinct
/// pair, three for a bosonic node, one (PsiM) for a fermionic node.
std::vector<BellLabel> bell_basis_labels(Statistics statistics, bool same_node);

/// State carried together with its exact squared norm, so probabilities stay
/// in the field even when the normalizer itself does not.
struct WeightedState {
    ManyBodyState state;
    Scalar norm_squared;
};

struct MeasureOutcome {
    BellLabel label;
    Scalar probability;      // exact; outcomes sum to 1
    WeightedState residual;  // remaining n-2 particles
};

/// Projects onto the Bell basis of the target. Every term of the state must
/// hold exactly two particles in the target subspace.
std::vector<MeasureOutcome> bell_measure(const WeightedState& state, BellTarget target);

/// |<Bell(label)|state>|^2 for a two-particle state on the target pair.
Scalar fidelity(const WeightedState& two_particle_state, BellTarget target, BellLabel label);

}  // namespace qswap
