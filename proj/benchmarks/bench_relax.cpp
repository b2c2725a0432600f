#include <benchmark/benchmark.h>

#include "selcon/connectors.hpp"
#include "selcon/metrics.hpp"
#include "selcon/querygen.hpp"

using namespace selcon;

namespace {

const PlantedPartition& instance() {
    static const PlantedPartition pp = planted_partition(4, 50, 0.3, 0.01, 1);
    return pp;
}

VertexSet query_for(std::size_t n, std::size_t m) {
    const auto& pp = instance();
    return generate_query(pp.graph, pp.communities, {n, m, m == 0 ? 0 : std::min<std::size_t>(m, 3), 7});
}

} // namespace

static void BM_DistanceProfile(benchmark::State& state) {
    const auto& g = instance().graph;
    for (auto _ : state) {
        benchmark::DoNotOptimize(distance_profile(g));
    }
}
BENCHMARK(BM_DistanceProfile);

static void BM_Betweenness(benchmark::State& state) {
    const auto& g = instance().graph;
    for (auto _ : state) {
        benchmark::DoNotOptimize(betweenness(g));
    }
}
BENCHMARK(BM_Betweenness);

static void BM_MwcConnector(benchmark::State& state) {
    const auto q = query_for(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mwc_connector(instance().graph, q));
    }
}
BENCHMARK(BM_MwcConnector)->Arg(2)->Arg(5)->Arg(10);

// Greedy relaxation of a fixed 64-vertex subgraph with a growing removable part.
static void BM_GreedyRelax(benchmark::State& state) {
    const auto& g = instance().graph;
    const auto removable = static_cast<VertexId>(state.range(0));
    const bool localized = state.range(1) != 0;
    const VertexSet all = VertexSet::range(0, 64);
    const VertexSet q = VertexSet::range(0, 64 - removable);
    for (auto _ : state) {
        benchmark::DoNotOptimize(greedy_relax(g, all, q, {1, localized}));
    }
}
BENCHMARK(BM_GreedyRelax)->ArgsProduct({{4, 8, 16, 32}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_ExhaustiveRelax(benchmark::State& state) {
    const auto& g = instance().graph;
    const auto removable = static_cast<VertexId>(state.range(0));
    const VertexSet all = VertexSet::range(0, 40);
    const VertexSet q = VertexSet::range(0, 40 - removable);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exhaustive_relax(g, all, q));
    }
}
BENCHMARK(BM_ExhaustiveRelax)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_GraMisPipeline(benchmark::State& state) {
    const auto q = query_for(10, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gra_mis(instance().graph, q));
    }
}
BENCHMARK(BM_GraMisPipeline)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
