#include "qswap/state.hpp"

#include <algorithm>
#include <stdexcept>

namespace qswap {

void SingleParticleState::set_amplitude(Mode m, const Scalar& a) {
    auto it = std::lower_bound(amps_.begin(), amps_.end(), m,
                               [](const auto& p, Mode key) { return p.first < key; });
    if (it != amps_.end() && it->first == m) {
        if (a.is_zero()) {
            amps_.erase(it);
        } else {
            it->second = a;
        }
    } else if (!a.is_zero()) {
        amps_.insert(it, {m, a});
    }
}

Scalar SingleParticleState::amplitude(Mode m) const {
    auto it = std::lower_bound(amps_.begin(), amps_.end(), m,
                               [](const auto& p, Mode key) { return p.first < key; });
    if (it != amps_.end() && it->first == m) return it->second;
    return Scalar(0);
}

Scalar overlap(const SingleParticleState& bra, const SingleParticleState& ket) {
    Scalar result(0);
    auto i = bra.amps_.begin();
    auto j = ket.amps_.begin();
    while (i != bra.amps_.end() && j != ket.amps_.end()) {
        if (i->first < j->first) {
            ++i;
        } else if (j->first < i->first) {
            ++j;
        } else {
            result += i->second * j->second;
            ++i;
            ++j;
        }
    }
    return result;
}

std::strong_ordering operator<=>(const SingleParticleState& a, const SingleParticleState& b) {
    const auto& x = a.amps_;
    const auto& y = b.amps_;
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
        if (auto c = x[i].first <=> y[i].first; c != 0) return c;
        if (x[i].second < y[i].second) return std::strong_ordering::less;
        if (y[i].second < x[i].second) return std::strong_ordering::greater;
    }
    return x.size() <=> y.size();
}

std::strong_ordering operator<=>(const ProductKet& a, const ProductKet& b) {
    if (auto c = a.statistics <=> b.statistics; c != 0) return c;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (auto c = a.particles[i] <=> b.particles[i]; c != 0) return c;
    }
    return a.size() <=> b.size();
}

ScalarMatrix overlap_matrix(const std::vector<SingleParticleState>& bras,
                            const std::vector<SingleParticleState>& kets) {
    if (bras.size() != kets.size()) {
        throw std::invalid_argument("overlap_matrix: bra/ket length mismatch");
    }
    ScalarMatrix m(bras.size());
    for (std::size_t i = 0; i < bras.size(); ++i) {
        for (std::size_t j = 0; j < kets.size(); ++j) {
            m.at(i, j) = overlap(bras[i], kets[j]);
        }
    }
    return m;
}

Scalar inner_product(const ProductKet& bra, const ProductKet& ket) {
    if (bra.size() != ket.size()) {
        throw std::invalid_argument("inner_product: particle number mismatch");
    }
    if (bra.statistics != ket.statistics) {
        throw std::invalid_argument("inner_product: statistics mismatch");
    }
    ScalarMatrix m = overlap_matrix(bra.particles, ket.particles);
    return bra.statistics == Statistics::Fermion ? determinant(m)
                                                 : permanent(m, m.dim());
}

void ManyBodyState::add_term(const ProductKet& ket, const Scalar& coeff) {
    if (ket.size() != particles_) {
        throw std::invalid_argument("ManyBodyState: particle number mismatch");
    }
    if (ket.statistics != statistics_) {
        throw std::invalid_argument("ManyBodyState: statistics mismatch");
    }
    auto [it, inserted] = terms_.try_emplace(ket, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    } else if (coeff.is_zero()) {
        terms_.erase(it);
    }
}

ManyBodyState ManyBodyState::scaled(const Scalar& factor) const {
    ManyBodyState out(statistics_, particles_);
    if (factor.is_zero()) return out;
    for (const auto& [ket, coeff] : terms_) out.terms_.emplace(ket, coeff * factor);
    return out;
}

int canonicalize_modes(std::vector<Mode>& modes, Statistics statistics) {
    // Insertion sort counting inversions; tuples are short.
    int inversions = 0;
    for (std::size_t i = 1; i < modes.size(); ++i) {
        Mode m = modes[i];
        std::size_t j = i;
        while (j > 0 && m < modes[j - 1]) {
            modes[j] = modes[j - 1];
            --j;
            ++inversions;
        }
        modes[j] = m;
    }
    if (statistics == Statistics::Fermion) {
        if (std::adjacent_find(modes.begin(), modes.end()) != modes.end()) return 0;
        return inversions % 2 == 0 ? 1 : -1;
    }
    return 1;
}

ProductKet localized_ket(Statistics statistics, const std::vector<Mode>& modes) {
    ProductKet ket{statistics, {}};
    ket.particles.reserve(modes.size());
    for (Mode m : modes) ket.particles.push_back(SingleParticleState::basis(m));
    return ket;
}

std::optional<std::vector<Mode>> localized_modes(const ProductKet& ket) {
    std::vector<Mode> modes;
    modes.reserve(ket.size());
    for (const auto& p : ket.particles) {
        if (!p.is_basis()) return std::nullopt;
        modes.push_back(p.basis_mode());
    }
    return modes;
}

Scalar multiset_weight(const std::vector<Mode>& modes, Statistics statistics) {
    if (statistics == Statistics::Fermion) {
        // a repeated mode makes the ket Pauli-null, not merely unweighted
        for (std::size_t i = 1; i < modes.size(); ++i) {
            if (modes[i] == modes[i - 1]) return Scalar(0);
        }
        return Scalar(1);
    }
    Rational w(1);
    std::size_t run = 1;
    for (std::size_t i = 1; i <= modes.size(); ++i) {
        if (i < modes.size() && modes[i] == modes[i - 1]) {
            ++run;
            w *= static_cast<long>(run);
        } else {
            run = 1;
        }
    }
    return Scalar(w);
}

std::map<int, int> node_counts(const std::vector<Mode>& modes) {
    std::map<int, int> counts;
    for (Mode m : modes) ++counts[m.node];
    return counts;
}

bool is_localized_canonical(const ManyBodyState& state) {
    for (const auto& [ket, coeff] : state.terms()) {
        auto modes = localized_modes(ket);
        if (!modes) return false;
        if (!std::is_sorted(modes->begin(), modes->end())) return false;
    }
    return true;
}

ManyBodyState expand_localized(const ManyBodyState& state) {
    ManyBodyState out(state.statistics(), state.particle_number());
    const std::size_t n = state.particle_number();
    std::vector<Mode> modes(n);
    std::vector<Mode> sorted;
    for (const auto& [ket, coeff] : state.terms()) {
        // Cartesian product over each particle's localized components.
        std::vector<std::size_t> index(n, 0);
        while (true) {
            Scalar amp = coeff;
            for (std::size_t i = 0; i < n; ++i) {
                const auto& comp = ket.particles[i].amplitudes()[index[i]];
                modes[i] = comp.first;
                amp *= comp.second;
            }
            sorted = modes;
            int sign = canonicalize_modes(sorted, state.statistics());
            if (sign != 0) {
                out.add_term(localized_ket(state.statistics(), sorted),
                             sign < 0 ? -amp : amp);
            }
            // Advance the mixed-radix index.
            std::size_t i = 0;
            for (; i < n; ++i) {
                if (++index[i] < ket.particles[i].amplitudes().size()) break;
                index[i] = 0;
            }
            if (i == n) break;
        }
    }
    return out;
}

namespace {

// Diagonal inner product for canonical localized states: distinct canonical
// kets are orthogonal and <t|t> is the multiset weight.
Scalar localized_inner_product(const ManyBodyState& a, const ManyBodyState& b) {
    Scalar result(0);
    auto i = a.terms().begin();
    auto j = b.terms().begin();
    while (i != a.terms().end() && j != b.terms().end()) {
        if (i->first < j->first) {
            ++i;
        } else if (j->first < i->first) {
            ++j;
        } else {
            auto modes = localized_modes(i->first);
            result += i->second * j->second * multiset_weight(*modes, a.statistics());
            ++i;
            ++j;
        }
    }
    return result;
}

}  // namespace

Scalar state_inner_product(const ManyBodyState& a, const ManyBodyState& b) {
    if (a.particle_number() != b.particle_number()) {
        throw std::invalid_argument("state_inner_product: particle number mismatch");
    }
    if (a.statistics() != b.statistics()) {
        throw std::invalid_argument("state_inner_product: statistics mismatch");
    }
    if (is_localized_canonical(a) && is_localized_canonical(b)) {
        return localized_inner_product(a, b);
    }
    Scalar result(0);
    for (const auto& [bra, cb] : a.terms()) {
        for (const auto& [ket, ck] : b.terms()) {
            result += cb * ck * inner_product(bra, ket);
        }
    }
    return result;
}

Scalar norm_squared(const ManyBodyState& a) { return state_inner_product(a, a); }

NormalizeResult normalize(const ManyBodyState& a) {
    Scalar n2 = norm_squared(a);
    if (n2.is_zero()) throw std::domain_error("normalize: zero state");
    if (auto root = n2.sqrt()) {
        return {a.scaled(root->inverse()), Scalar(1), true};
    }
    return {a, n2, false};
}

}  // namespace qswap
