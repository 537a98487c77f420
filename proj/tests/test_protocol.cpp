#include "qswap/protocol.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <set>

using namespace qswap;
using namespace qswap::test;

TEST_CASE("prepared states carry the expected prefactors") {
    // fermions, shared N=2: nine terms, 1/3 each after normalization
    auto fermionic = prepare_state({2, Topology::SharedChain, Statistics::Fermion});
    CHECK(expand_localized(fermionic.state).term_count() == 9);

    // bosons, shared N=2: norm 5/4, i.e. expansion prefactor (1/4)/(5/4) = 1/5
    auto bosonic = prepare_state({2, Topology::SharedChain, Statistics::Boson});
    ManyBodyState expanded = expand_localized(bosonic.state);
    CHECK(expanded.term_count() == 16);
    for (const auto& [ket, coeff] : expanded.terms()) {
        CHECK(coeff.abs_square() == Scalar::rational(1, 25));
    }

    // separated N=2: sixteen terms with coefficient 1/4 up to eta signs
    for (Statistics statistics : {Statistics::Fermion, Statistics::Boson}) {
        auto sep = prepare_state({2, Topology::Separated, statistics});
        ManyBodyState e = expand_localized(sep.state);
        CHECK(e.term_count() == 16);
        for (const auto& [ket, coeff] : e.terms()) {
            CHECK(coeff.abs_square() == Scalar::rational(1, 16));
        }
    }

    CHECK_THROWS_AS(prepare_state({1, Topology::SharedChain, Statistics::Fermion}),
                    std::invalid_argument);
}

TEST_CASE("fermionic transfer") {
    auto run2 = run_fermionic_transfer(2);
    CHECK(run2.success_probability == Scalar::rational(2, 9));
    REQUIRE(run2.branches.size() == 1);
    CHECK(run2.branches[0].final_ab_label == BellLabel::PsiMinus);
    CHECK(run2.branches[0].branch_probability == Scalar(1));

    auto run3 = run_fermionic_transfer(3);
    CHECK(run3.success_probability == Scalar::rational(1, 8));
    REQUIRE(run3.branches.size() == 1);
    CHECK(run3.branches[0].final_ab_label == BellLabel::PsiMinus);
    CHECK(fidelity(run3.branches[0].final_ab_state, BellTarget::pair(0, 3),
                   BellLabel::PsiMinus) == Scalar(1));
}

TEST_CASE("degenerate spin preparations") {
    // Identical (not opposite) spins within each pair: bosons post-select
    // fine but transfer no entanglement; fermions are Pauli-null outright.
    std::vector<std::pair<Spin, Spin>> same_spins = {{Dn, Dn}, {Dn, Dn}};
    auto bosonic = prepare_state({2, Topology::SharedChain, Statistics::Boson}, same_spins);
    CHECK(bosonic.norm_squared.sign() > 0);
    CountConfiguration cfg;
    cfg.counts = {{0, 1}, {1, 2}, {2, 1}};
    auto projected = slocc_project(bosonic.state, cfg);
    CHECK(projected.probability.sign() > 0);
    auto outcomes = bell_measure({projected.post_state, projected.post_norm_squared},
                                 BellTarget::node(1));
    for (const auto& o : outcomes) {
        CHECK(fidelity(o.residual, BellTarget::pair(0, 2), BellLabel::PsiMinus) == Scalar(0));
    }

    auto fermionic =
        prepare_state({2, Topology::SharedChain, Statistics::Fermion}, same_spins);
    CHECK(fermionic.norm_squared == Scalar(0));
}

TEST_CASE("bosonic cascade") {
    auto run2 = run_bosonic_cascade(2);
    CHECK(run2.success_probability == Scalar::rational(6, 25));
    REQUIRE(run2.branches.size() == 3);
    for (const auto& b : run2.branches) {
        CHECK(b.branch_probability == Scalar::rational(1, 3));
    }

    auto run3 = run_bosonic_cascade(3);
    CHECK(run3.success_probability == Scalar::rational(1, 8));
    REQUIRE(run3.branches.size() == 9);

    // Branch after Phi-_M1: leaves (Phi+_M2, Psi-), (Phi-_M2, Psi+),
    // (Psi_M2, Phi-), each with conditional probability 1/3.
    std::set<std::pair<BellLabel, BellLabel>> seen;
    for (const auto& b : run3.branches) {
        REQUIRE(b.outcome_sequence.size() == 2);
        if (b.outcome_sequence[0].second != BellLabel::PhiMinusM) continue;
        CHECK(b.branch_probability == Scalar::rational(1, 9));
        seen.insert({b.outcome_sequence[1].second, b.final_ab_label});
    }
    std::set<std::pair<BellLabel, BellLabel>> expected = {
        {BellLabel::PhiPlusM, BellLabel::PsiMinus},
        {BellLabel::PhiMinusM, BellLabel::PsiPlus},
        {BellLabel::PsiM, BellLabel::PhiMinus}};
    CHECK(seen == expected);
}

TEST_CASE("separated swap") {
    for (Statistics statistics : {Statistics::Fermion, Statistics::Boson}) {
        auto run2 = run_separated_swap(2, statistics);
        CHECK(run2.success_probability == Scalar::rational(1, 4));
        REQUIRE(run2.branches.size() == 4);
        for (const auto& b : run2.branches) {
            CHECK(b.branch_probability == Scalar::rational(1, 4));
            CHECK(b.final_ab_label == b.outcome_sequence[0].second);
        }
        auto run3 = run_separated_swap(3, statistics);
        CHECK(run3.success_probability == Scalar::rational(1, 8));
        REQUIRE(run3.branches.size() == 16);
    }

    // eta flip: identical outcome probability lists, sign-flipped pair states
    auto fermionic = run_separated_swap(2, Statistics::Fermion);
    auto bosonic = run_separated_swap(2, Statistics::Boson);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(fermionic.branches[i].branch_probability ==
              bosonic.branches[i].branch_probability);
        CHECK(fermionic.branches[i].final_ab_label == bosonic.branches[i].final_ab_label);
    }
    CHECK(fermionic.projection.post_state != bosonic.projection.post_state);
}

TEST_CASE("closed forms agree with direct projection") {
    for (int n : {4, 6, 8}) {
        CHECK(closed_form_probability(ProtocolKind::Separated, n) ==
              run_separated_swap(n / 2, Statistics::Fermion).success_probability);
        CHECK(closed_form_probability(ProtocolKind::FermionicShared, n) ==
              run_fermionic_transfer(n / 2).success_probability);
        CHECK(closed_form_probability(ProtocolKind::BosonicShared, n) ==
              run_bosonic_cascade(n / 2).success_probability);
    }
    CHECK(closed_form_probability(ProtocolKind::Separated, 4) == Scalar::rational(1, 4));
    CHECK(closed_form_probability(ProtocolKind::FermionicShared, 4) ==
          Scalar::rational(2, 9));
    CHECK(closed_form_probability(ProtocolKind::BosonicShared, 4) ==
          Scalar::rational(6, 25));
    CHECK(closed_form_probability(ProtocolKind::FermionicShared, 6) ==
          Scalar::rational(1, 8));
    CHECK(closed_form_probability(ProtocolKind::BosonicShared, 6) ==
          Scalar::rational(1, 8));
    CHECK_THROWS_AS(closed_form_probability(ProtocolKind::Separated, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(closed_form_probability(ProtocolKind::Separated, 2),
                    std::invalid_argument);
}

TEST_CASE("branch trees normalize and succeed") {
    struct Case { ProtocolKind kind; int pairs; };
    for (auto [kind, pairs] : {Case{ProtocolKind::FermionicShared, 3},
                               Case{ProtocolKind::BosonicShared, 3},
                               Case{ProtocolKind::Separated, 3}}) {
        ProtocolRun run = kind == ProtocolKind::FermionicShared ? run_fermionic_transfer(pairs)
                          : kind == ProtocolKind::BosonicShared ? run_bosonic_cascade(pairs)
                          : run_separated_swap(pairs, Statistics::Boson);
        Scalar total(0);
        BellTarget ab = BellTarget::pair(0, run.network.rank("B"));
        for (const auto& b : run.branches) {
            total += b.branch_probability;
            CHECK(fidelity(b.final_ab_state, ab, b.final_ab_label) == Scalar(1));
        }
        CHECK(total == Scalar(1));
    }
}

TEST_CASE("success probabilities decay monotonically up to n=12") {
    for (ProtocolKind kind : {ProtocolKind::Separated, ProtocolKind::FermionicShared,
                              ProtocolKind::BosonicShared}) {
        Scalar previous(1);
        for (int n = 4; n <= 12; n += 2) {
            Scalar p = closed_form_probability(kind, n);
            CHECK((previous - p).sign() >= 0);
            previous = p;
        }
    }
}

TEST_CASE("branch sampling is deterministic") {
    auto run = run_bosonic_cascade(3);
    const auto& a = sample_branch(run, 12345);
    const auto& b = sample_branch(run, 12345);
    CHECK(&a == &b);
    // all 9 leaves reachable across seeds
    std::set<const BranchOutcome*> seen;
    for (std::uint64_t seed = 0; seed < 200; ++seed) seen.insert(&sample_branch(run, seed));
    CHECK(seen.size() == run.branches.size());
}
