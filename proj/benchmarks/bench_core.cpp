#include <benchmark/benchmark.h>

#include "dqc/annealer.hpp"
#include "dqc/baselines.hpp"
#include "dqc/ea_scheduler.hpp"
#include "dqc/rng.hpp"
#include "dqc/schedule.hpp"
#include "dqc/statevector.hpp"

using namespace dqc;

static void BM_Cost(benchmark::State& state) {
    const auto depth = static_cast<std::size_t>(state.range(0));
    const LayeredCircuit lc = layerize(random_circuit(8, depth, 1));
    const NetworkTopology net = build_grid(2, 2);
    Rng rng = make_rng(0);
    Schedule s(8, lc.depth());
    for (auto& cell : s.cells()) cell = uniform_index(rng, 4);
    for (auto _ : state) benchmark::DoNotOptimize(cost(s, lc, net));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(depth));
}
BENCHMARK(BM_Cost)->Arg(30)->Arg(180);

static void BM_Anneal(benchmark::State& state) {
    const LayeredCircuit lc = layerize(random_circuit(8, 30, 1));
    const NetworkTopology net = build_grid(2, 2);
    SaParams p;
    p.max_iterations = static_cast<std::size_t>(state.range(0));
    p.trace_stride = 0;
    for (auto _ : state) benchmark::DoNotOptimize(anneal(lc, net, p));
}
BENCHMARK(BM_Anneal)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_Evolve(benchmark::State& state) {
    const LayeredCircuit lc = layerize(random_circuit(8, 30, 1));
    const NetworkTopology net = build_grid(2, 2);
    EaParams p;
    p.population_size = 50;
    p.generations = 50;
    for (auto _ : state) benchmark::DoNotOptimize(evolve(lc, net, p));
}
BENCHMARK(BM_Evolve)->Unit(benchmark::kMillisecond);

static void BM_Statevector(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Circuit c = random_circuit(n, 30, 2);
    for (auto _ : state) benchmark::DoNotOptimize(run(c));
}
BENCHMARK(BM_Statevector)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

static void BM_Partition(benchmark::State& state) {
    const InteractionGraph g = interaction_graph(random_circuit(16, 60, 3));
    const std::vector<std::size_t> caps(8, 2);
    for (auto _ : state) benchmark::DoNotOptimize(partition(g, 8, caps, 0));
}
BENCHMARK(BM_Partition)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
