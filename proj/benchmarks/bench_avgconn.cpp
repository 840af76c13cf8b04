#include <benchmark/benchmark.h>

#include "avgconn/analysis.hpp"
#include "avgconn/connectivity.hpp"
#include "avgconn/enumerate.hpp"
#include "avgconn/families.hpp"
#include "avgconn/graph.hpp"
#include "avgconn/matching.hpp"
#include "avgconn/serialize.hpp"
#include "avgconn/spectral.hpp"

namespace {

void BM_LocalConnectivity(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const avgconn::Graph g = avgconn::complete_bipartite(n / 2, n - n / 2).graph;
    for (auto _ : state) {
        benchmark::DoNotOptimize(avgconn::local_connectivity(g, 0, n - 1));
    }
}
BENCHMARK(BM_LocalConnectivity)->Arg(20)->Arg(50)->Arg(100);

void BM_AllPairsConnectivity(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const avgconn::Graph g = avgconn::complete_bipartite(n / 2, n - n / 2).graph;
    for (auto _ : state) {
        benchmark::DoNotOptimize(avgconn::all_pairs_connectivity(g, 1));
    }
}
BENCHMARK(BM_AllPairsConnectivity)->Arg(16)->Arg(32)->Arg(50);

void BM_AllPairsConnectivityParallel(benchmark::State& state) {
    const avgconn::Graph g = avgconn::complete_bipartite(25, 25).graph;
    for (auto _ : state) {
        benchmark::DoNotOptimize(avgconn::all_pairs_connectivity(g, static_cast<unsigned>(state.range(0))));
    }
}
BENCHMARK(BM_AllPairsConnectivityParallel)->Arg(1)->Arg(2)->Arg(4);

void BM_EigenSymmetric(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const avgconn::SymmetricMatrix m =
        avgconn::connectivity_matrix_scaled(avgconn::g1_family(n, 2), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(avgconn::eigen_symmetric(m));
    }
}
BENCHMARK(BM_EigenSymmetric)->Arg(10)->Arg(25)->Arg(50);

void BM_PowerIteration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const avgconn::SymmetricMatrix m =
        avgconn::connectivity_matrix_scaled(avgconn::g1_family(n, 2), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(avgconn::spectral_radius(m));
    }
}
BENCHMARK(BM_PowerIteration)->Arg(10)->Arg(25)->Arg(50);

void BM_MaximumMatching(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const avgconn::Graph g = avgconn::cycle(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(avgconn::maximum_matching(g).alpha_prime);
    }
}
BENCHMARK(BM_MaximumMatching)->Arg(10)->Arg(50)->Arg(200);

void BM_Analyze(benchmark::State& state) {
    const avgconn::Graph g = avgconn::g2_family(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(avgconn::analyze(g, 1));
    }
}
BENCHMARK(BM_Analyze)->Arg(8)->Arg(14)->Arg(20);

void BM_SweepExhaustive(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(avgconn::sweep_exhaustive(static_cast<int>(state.range(0)), false, 0));
    }
}
BENCHMARK(BM_SweepExhaustive)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Graph6RoundTrip(benchmark::State& state) {
    const avgconn::Graph g = avgconn::g1_family(50, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(avgconn::parse_graph6(avgconn::write_graph6(g)));
    }
}
BENCHMARK(BM_Graph6RoundTrip);

}  // namespace

BENCHMARK_MAIN();
