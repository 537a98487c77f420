#pragma once

#include "qswap/matrix.hpp"
#include "qswap/network.hpp"
#include "qswap/scalar.hpp"

#include <compare>
#include <map>
#include <optional>
#include <vector>

namespace qswap {

enum class Spin { Down = 0, Up = 1 };

inline Spin flip(Spin s) { return s == Spin::Down ? Spin::Up : Spin::Down; }

/// Localized one-particle basis label: a bound state at a node with a
/// pseudospin. Canonical order is (node rank, spin), down before up.
struct Mode {
    int node = 0;
    Spin spin = Spin::Down;
    auto operator<=>(const Mode&) const = default;
};

/// One particle as a linear combination of localized modes, e.g. the
/// delocalized beam-splitter output (|A> + |M>)/sqrt(2) with a fixed spin.
class SingleParticleState {
  public:
    SingleParticleState() = default;

    static SingleParticleState basis(Mode m) {
        SingleParticleState s;
        s.amps_.emplace_back(m, Scalar(1));
        return s;
    }

    /// Equal-amplitude delocalization of `spin` over two nodes.
    static SingleParticleState delocalized(int node_a, int node_b, Spin spin) {
        SingleParticleState s;
        s.amps_.emplace_back(Mode{node_a, spin}, Scalar::sqrt2(1, 2));
        s.amps_.emplace_back(Mode{node_b, spin}, Scalar::sqrt2(1, 2));
        return s;
    }

    void set_amplitude(Mode m, const Scalar& a);
    Scalar amplitude(Mode m) const;
    const std::vector<std::pair<Mode, Scalar>>& amplitudes() const { return amps_; }

    bool empty() const { return amps_.empty(); }
    bool is_basis() const { return amps_.size() == 1 && amps_[0].second == Scalar(1); }
    Mode basis_mode() const { return amps_.at(0).first; }

    /// <bra|ket>: amplitudes are real, no conjugation.
    friend Scalar overlap(const SingleParticleState& bra, const SingleParticleState& ket);

    friend bool operator==(const SingleParticleState&, const SingleParticleState&) = default;
    friend std::strong_ordering operator<=>(const SingleParticleState& a,
                                            const SingleParticleState& b);

  private:
    std::vector<std::pair<Mode, Scalar>> amps_;  // sorted by Mode, nonzero
};

/// Ordered product of single-particle states with a statistics tag. The
/// physical state is reordering-invariant up to the eta-parity sign; tests
/// probe this through inner products, not through the representation.
struct ProductKet {
    Statistics statistics = Statistics::Fermion;
    std::vector<SingleParticleState> particles;

    std::size_t size() const { return particles.size(); }

    friend bool operator==(const ProductKet&, const ProductKet&) = default;
    friend std::strong_ordering operator<=>(const ProductKet& a, const ProductKet& b);
};

/// Matrix of overlaps <bra_i|ket_j>.
ScalarMatrix overlap_matrix(const std::vector<SingleParticleState>& bras,
                            const std::vector<SingleParticleState>& kets);

/// No-label n-particle amplitude: sum over permutations P of
/// eta^P prod_i <bra_i|ket_{P_i}>, i.e. the determinant (fermions) or
/// permanent (bosons) of the overlap matrix.
Scalar inner_product(const ProductKet& bra, const ProductKet& ket);

/// Linear combination of product kets; zero-coefficient terms are pruned.
class ManyBodyState {
  public:
    ManyBodyState(Statistics statistics, std::size_t particles)
        : statistics_(statistics), particles_(particles) {}

    Statistics statistics() const { return statistics_; }
    std::size_t particle_number() const { return particles_; }
    const std::map<ProductKet, Scalar>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const ProductKet& ket, const Scalar& coeff);
    ManyBodyState scaled(const Scalar& factor) const;

    friend bool operator==(const ManyBodyState&, const ManyBodyState&) = default;

  private:
    Statistics statistics_;
    std::size_t particles_;
    std::map<ProductKet, Scalar> terms_;
};

/// Bilinear extension of inner_product over terms. States whose kets are all
/// canonical localized products use a diagonal fast path.
Scalar state_inner_product(const ManyBodyState& a, const ManyBodyState& b);
Scalar norm_squared(const ManyBodyState& a);

struct NormalizeResult {
    ManyBodyState state;
    Scalar norm_squared;   // of the returned state
    bool normalized;       // false when sqrt(norm^2) is not in Q(sqrt2)
};

/// Divides by sqrt(norm^2) when that root lies in Q(sqrt2); otherwise
/// returns the input state unchanged together with its exact norm^2, so
/// downstream probabilities can be formed as ratios of norm^2 values.
NormalizeResult normalize(const ManyBodyState& a);

/// Sorts a localized mode tuple into canonical order in place. Returns the
/// eta-parity sign of the sorting permutation, or 0 when the tuple is
/// fermionic and contains a repeated mode (Pauli-null).
int canonicalize_modes(std::vector<Mode>& modes, Statistics statistics);

/// Product ket of localized basis states; `modes` is assumed canonical.
ProductKet localized_ket(Statistics statistics, const std::vector<Mode>& modes);

/// Mode tuple of a ket whose particles are all localized basis states.
std::optional<std::vector<Mode>> localized_modes(const ProductKet& ket);

/// <t|t> of a canonical localized ket: product over repeated modes of
/// count! for bosons, 1 for fermions (canonical fermionic kets are distinct).
Scalar multiset_weight(const std::vector<Mode>& modes, Statistics statistics);

/// Per-node particle counts of a mode tuple.
std::map<int, int> node_counts(const std::vector<Mode>& modes);

/// Rewrites the state over canonical localized product kets only, with
/// reordering signs absorbed into coefficients and Pauli-null terms dropped.
ManyBodyState expand_localized(const ManyBodyState& state);

/// True when every term is a canonical localized product ket.
bool is_localized_canonical(const ManyBodyState& state);

}  // namespace qswap
