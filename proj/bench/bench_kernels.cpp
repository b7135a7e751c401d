// Serial reference kernels against their OpenMP counterparts on random
// graphs dense enough to have a few hundred triangles.

#include <memory>

#include <benchmark/benchmark.h>

#include "gext/calculus.hpp"
#include "gext/cohomology.hpp"
#include "gext/random_forms.hpp"

namespace {

using namespace gext;

Graph random_graph(std::size_t n, unsigned percent, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (rng.chance(percent))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Exec exec_of(const benchmark::State& state)
{
    return state.range(1) ? Exec::Parallel : Exec::Serial;
}

void BM_CliqueBuild(benchmark::State& state)
{
    Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 30, 7);
    for (auto _ : state) {
        CliqueComplex cx(g, 5, exec_of(state));
        benchmark::DoNotOptimize(cx.level_size(3));
    }
}

void BM_ExteriorDerivative(benchmark::State& state)
{
    auto cx = std::make_shared<const CliqueComplex>(random_graph(static_cast<std::size_t>(state.range(0)), 30, 7), 4);
    Rng rng(1);
    Form a = random_form(cx, 1, rng, 90);
    for (auto _ : state)
        benchmark::DoNotOptimize(exterior_derivative(a, exec_of(state)).nonzeros());
}

void BM_Wedge(benchmark::State& state)
{
    auto cx = std::make_shared<const CliqueComplex>(random_graph(static_cast<std::size_t>(state.range(0)), 30, 7), 4);
    Rng rng(2);
    Form a = random_form(cx, 1, rng, 90);
    Form b = random_form(cx, 1, rng, 90);
    for (auto _ : state)
        benchmark::DoNotOptimize(wedge(a, b, exec_of(state)).nonzeros());
}

void BM_CoboundaryMatrix(benchmark::State& state)
{
    CliqueComplex cx(random_graph(static_cast<std::size_t>(state.range(0)), 30, 7), 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(coboundary_matrix(cx, 1, exec_of(state)).entries.size());
}

// second argument: 0 = serial reference, 1 = OpenMP
BENCHMARK(BM_CliqueBuild)->ArgsProduct({{40, 80}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExteriorDerivative)->ArgsProduct({{40, 80}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Wedge)->ArgsProduct({{40, 80}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoboundaryMatrix)->ArgsProduct({{40, 80}, {0, 1}})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
