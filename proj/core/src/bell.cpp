#include "qswap/bell.hpp"

#include <set>
#include <stdexcept>

namespace qswap {

std::string to_string(BellLabel label) {
    switch (label) {
        case BellLabel::PsiPlus: return "Psi+";
        case BellLabel::PsiMinus: return "Psi-";
        case BellLabel::PhiPlus: return "Phi+";
        case BellLabel::PhiMinus: return "Phi-";
        case BellLabel::PsiM: return "Psi_M";
        case BellLabel::PhiPlusM: return "Phi+_M";
        case BellLabel::PhiMinusM: return "Phi-_M";
    }
    return "?";
}

namespace {

struct BellComponent {
    std::vector<Mode> modes;  // as written, not yet canonical
    Scalar coeff;
};

std::vector<BellComponent> bell_components(BellTarget t, BellLabel label) {
    const Scalar half = Scalar::rational(1, 2);
    const Scalar inv_sqrt2 = Scalar::sqrt2(1, 2);
    const int a = t.node_a, b = t.node_b;
    switch (label) {
        case BellLabel::PsiPlus:
            return {{{{a, Spin::Down}, {b, Spin::Up}}, inv_sqrt2},
                    {{{a, Spin::Up}, {b, Spin::Down}}, inv_sqrt2}};
        case BellLabel::PsiMinus:
            return {{{{a, Spin::Down}, {b, Spin::Up}}, inv_sqrt2},
                    {{{a, Spin::Up}, {b, Spin::Down}}, -inv_sqrt2}};
        case BellLabel::PhiPlus:
            return {{{{a, Spin::Down}, {b, Spin::Down}}, inv_sqrt2},
                    {{{a, Spin::Up}, {b, Spin::Up}}, inv_sqrt2}};
        case BellLabel::PhiMinus:
            return {{{{a, Spin::Down}, {b, Spin::Down}}, inv_sqrt2},
                    {{{a, Spin::Up}, {b, Spin::Up}}, -inv_sqrt2}};
        case BellLabel::PsiM:
            return {{{{a, Spin::Up}, {a, Spin::Down}}, Scalar(1)}};
        case BellLabel::PhiPlusM:
            return {{{{a, Spin::Down}, {a, Spin::Down}}, half},
                    {{{a, Spin::Up}, {a, Spin::Up}}, half}};
        case BellLabel::PhiMinusM:
            return {{{{a, Spin::Down}, {a, Spin::Down}}, half},
                    {{{a, Spin::Up}, {a, Spin::Up}}, -half}};
    }
    throw std::invalid_argument("bell_components: bad label");
}

bool is_same_node_label(BellLabel label) {
    return label == BellLabel::PsiM || label == BellLabel::PhiPlusM ||
           label == BellLabel::PhiMinusM;
}

}  // namespace

ManyBodyState bell_state(Statistics statistics, BellTarget target, BellLabel label) {
    if (target.same_node() != is_same_node_label(label)) {
        throw std::invalid_argument("bell_state: label does not match target kind");
    }
    if (statistics == Statistics::Fermion && is_same_node_label(label) &&
        label != BellLabel::PsiM) {
        throw std::invalid_argument("bell_state: same-spin double occupancy is bosonic only");
    }
    ManyBodyState out(statistics, 2);
    for (auto& comp : bell_components(target, label)) {
        int sign = canonicalize_modes(comp.modes, statistics);
        if (sign == 0) continue;
        out.add_term(localized_ket(statistics, comp.modes),
                     sign < 0 ? -comp.coeff : comp.coeff);
    }
    return out;
}

std::vector<BellLabel> bell_basis_labels(Statistics statistics, bool same_node) {
    if (!same_node) {
        return {BellLabel::PsiPlus, BellLabel::PsiMinus, BellLabel::PhiPlus,
                BellLabel::PhiMinus};
    }
    if (statistics == Statistics::Fermion) return {BellLabel::PsiM};
    return {BellLabel::PsiM, BellLabel::PhiPlusM, BellLabel::PhiMinusM};
}

std::vector<MeasureOutcome> bell_measure(const WeightedState& input, BellTarget target) {
    const Statistics statistics = input.state.statistics();
    ManyBodyState expanded = expand_localized(input.state);
    if (expanded.empty()) throw std::domain_error("bell_measure: zero state");
    const std::size_t n = expanded.particle_number();

    auto in_target = [&target](Mode m) {
        return m.node == target.node_a || m.node == target.node_b;
    };

    // Occupancy check and collection of the residual ("rest") mode tuples.
    std::set<std::vector<Mode>> rest_tuples;
    for (const auto& [ket, coeff] : expanded.terms()) {
        auto modes = *localized_modes(ket);
        int a_count = 0, b_count = 0;
        std::vector<Mode> rest;
        for (Mode m : modes) {
            if (m.node == target.node_a) ++a_count;
            if (!target.same_node() && m.node == target.node_b) ++b_count;
            if (!in_target(m)) rest.push_back(m);
        }
        bool ok = target.same_node() ? a_count == 2 : (a_count == 1 && b_count == 1);
        if (!ok) {
            throw std::invalid_argument("bell_measure: target occupancy is not two");
        }
        rest_tuples.insert(std::move(rest));
    }

    const Scalar m2 = norm_squared(expanded);
    std::vector<MeasureOutcome> outcomes;
    for (BellLabel label : bell_basis_labels(statistics, target.same_node())) {
        std::vector<BellComponent> components;
        for (auto comp : bell_components(target, label)) {
            int sign = canonicalize_modes(comp.modes, statistics);
            if (sign == 0) continue;
            if (sign < 0) comp.coeff = -comp.coeff;
            components.push_back(std::move(comp));
        }
        ManyBodyState residual(statistics, n - 2);
        Scalar residual_norm2(0);
        for (const auto& rest : rest_tuples) {
            // amplitude <Bell ^ rest | Psi>, diagonal in the canonical basis
            Scalar amp(0);
            for (const auto& comp : components) {
                std::vector<Mode> full = comp.modes;
                full.insert(full.end(), rest.begin(), rest.end());
                int sign = canonicalize_modes(full, statistics);
                if (sign == 0) continue;
                ProductKet key = localized_ket(statistics, full);
                auto it = expanded.terms().find(key);
                if (it == expanded.terms().end()) continue;
                Scalar contrib = comp.coeff * it->second * multiset_weight(full, statistics);
                amp += sign < 0 ? -contrib : contrib;
            }
            if (amp.is_zero()) continue;
            Scalar w = multiset_weight(rest, statistics);
            residual.add_term(localized_ket(statistics, rest), amp / w);
            residual_norm2 += amp * amp / w;
        }
        if (residual_norm2.is_zero()) continue;
        outcomes.push_back({label, residual_norm2 / m2,
                            WeightedState{std::move(residual), residual_norm2}});
    }
    return outcomes;
}

Scalar fidelity(const WeightedState& two_particle_state, BellTarget target, BellLabel label) {
    if (two_particle_state.state.particle_number() != 2) {
        throw std::invalid_argument("fidelity: expected a two-particle state");
    }
    ManyBodyState bell = bell_state(two_particle_state.state.statistics(), target, label);
    ManyBodyState expanded = expand_localized(two_particle_state.state);
    Scalar amp = state_inner_product(bell, expanded);
    return amp * amp / norm_squared(expanded);
}

}  // namespace qswap
