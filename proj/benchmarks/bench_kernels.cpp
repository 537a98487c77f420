// Microbenchmarks for the exact kernels: determinant/permanent on protocol
// Gram matrices and the full prepare + project pipeline.

#include "qswap/protocol.hpp"

#include <benchmark/benchmark.h>

using namespace qswap;

namespace {

ScalarMatrix chain_gram(int n) {
    return gram_matrix({n / 2, Topology::SharedChain, Statistics::Fermion});
}

void BM_Determinant(benchmark::State& state) {
    ScalarMatrix g = chain_gram(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(determinant(g));
    }
}

void BM_Permanent(benchmark::State& state) {
    ScalarMatrix g = chain_gram(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(permanent(g));
    }
}

void BM_PrepareAndProject(benchmark::State& state) {
    int pairs = static_cast<int>(state.range(0)) / 2;
    NetworkSpec spec{pairs, Topology::SharedChain, Statistics::Boson};
    Network net = make_network(spec);
    for (auto _ : state) {
        WeightedState prepared = prepare_state(spec);
        benchmark::DoNotOptimize(
            slocc_project(prepared.state, post_selection_counts(spec, net)));
    }
}

void BM_ClosedFormSweep(benchmark::State& state) {
    int n_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        for (int n = 4; n <= n_max; n += 2) {
            for (ProtocolKind kind : {ProtocolKind::Separated,
                                      ProtocolKind::FermionicShared,
                                      ProtocolKind::BosonicShared}) {
                benchmark::DoNotOptimize(closed_form_probability(kind, n));
            }
        }
    }
}

BENCHMARK(BM_Determinant)->DenseRange(4, 12, 2);
BENCHMARK(BM_Permanent)->DenseRange(4, 12, 2);
BENCHMARK(BM_PrepareAndProject)->DenseRange(4, 8, 2);
BENCHMARK(BM_ClosedFormSweep)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
