#include <benchmark/benchmark.h>

#include "condkit/cloud.hpp"
#include "condkit/homology.hpp"
#include "condkit/metrics.hpp"
#include "condkit/surgery.hpp"

using namespace condkit;

static void BM_Svd(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto set = cloud::generate_matrices(64, n, n, cloud::Gaussian{0.0, 0.01}, 1);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(linalg::svd(set.matrices[i++ % 64]));
}
BENCHMARK(BM_Svd)->Arg(3)->Arg(8)->Arg(32);

static void BM_SurgeryBatch(benchmark::State& state) {
    const auto set = cloud::generate_matrices(10'000, 3, 3, cloud::Gaussian{0.0, 0.01}, 2);
    const auto plan = surgery::preset_plan(surgery::Preset::ThirdOne, 3);
    for (auto _ : state)
        for (const auto& a : set.matrices) benchmark::DoNotOptimize(surgery::apply_surgery(a, plan));
    state.SetItemsProcessed(state.iterations() * 10'000);
}
BENCHMARK(BM_SurgeryBatch)->Unit(benchmark::kMillisecond);

static void BM_RipsTorus(benchmark::State& state) {
    const auto pc = cloud::sample_torus(static_cast<std::size_t>(state.range(0)), 2.0, 1.0, 0);
    const auto dm = homology::pairwise_distances(pc);
    for (auto _ : state) benchmark::DoNotOptimize(homology::rips_persistence(dm));
}
BENCHMARK(BM_RipsTorus)->Arg(250)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_RipsMatrixCloud(benchmark::State& state) {
    const auto set = cloud::generate_matrices(static_cast<std::size_t>(state.range(0)), 3, 3,
                                              cloud::Gaussian{0.0, 0.01}, 3);
    const auto dm = homology::pairwise_distances(cloud::flatten_normalize(set));
    for (auto _ : state) benchmark::DoNotOptimize(homology::rips_persistence(dm, {.max_dim = 2}));
}
BENCHMARK(BM_RipsMatrixCloud)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_Bottleneck(benchmark::State& state) {
    const auto pc = cloud::sample_torus(static_cast<std::size_t>(state.range(0)), 2.0, 1.0, 4);
    const auto other = cloud::sample_torus(static_cast<std::size_t>(state.range(0)), 2.0, 1.0, 5);
    const auto a = homology::rips_persistence(homology::pairwise_distances(pc));
    const auto b = homology::rips_persistence(homology::pairwise_distances(other));
    for (auto _ : state) benchmark::DoNotOptimize(metrics::bottleneck_distance(a, b, 0));
}
BENCHMARK(BM_Bottleneck)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
