#include "umato/umato.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace umato;

namespace {

Dataset random_dataset(std::size_t n, std::size_t d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index c = 0; c < x.cols(); ++c) x(i, c) = g(rng);
    return Dataset(x);
}

void BM_KnnGraph(benchmark::State& state) {
    const Dataset d = random_dataset(static_cast<std::size_t>(state.range(0)), 101, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_knn_graph(d, 50, 1));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KnnGraph)->Arg(500)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_NeighborGraph(benchmark::State& state) {
    const Dataset d = random_dataset(static_cast<std::size_t>(state.range(0)), 101, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_neighbor_graph(d, 50, 1));
    }
}
BENCHMARK(BM_NeighborGraph)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Gradient(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Dataset d = random_dataset(n, 10, 3);
    const auto g = build_neighbor_graph(d, 15, 1);
    const Matrix y = rescale_to_box(pca_project(d, 2), 10.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cross_entropy_gradient(g.sym_weights, y, 1.0, 1.0, 1e-3, 4.0, 1));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0) * state.range(0));
}
BENCHMARK(BM_Gradient)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_Evaluate(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Dataset d = random_dataset(n, 101, 4);
    const Matrix z = pca_project(d, 2);
    MetricParams p;
    p.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(d.points(), z, p));
    }
}
BENCHMARK(BM_Evaluate)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_UmatoEmbed(benchmark::State& state) {
    const auto ds = subsample(generate_spheres(0), static_cast<std::size_t>(state.range(0)), 0);
    OptimizationConfig cfg;
    cfg.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(umato_embed(ds.data, cfg));
    }
}
BENCHMARK(BM_UmatoEmbed)->Arg(2000)->Unit(benchmark::kMillisecond)->Iterations(1);

} // namespace

BENCHMARK_MAIN();
