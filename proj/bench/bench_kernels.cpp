// Serial reference kernels against their OpenMP counterparts.

#include <random>

#include <benchmark/benchmark.h>

#include "cera/kernels.hpp"
#include "cera/monomial.hpp"

namespace {

using namespace cera;
using kernels::Bitset;

std::vector<Event> random_events(std::size_t n)
{
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> coord(0.0, 20.0), time(0.0, 50.0);
    std::vector<Event> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back({static_cast<VertexId>(i), {coord(rng), coord(rng)}, time(rng)});
    return out;
}

std::vector<Bitset> random_graph(std::size_t n, double density)
{
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Bitset> adj(n, Bitset(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (coin(rng) < density) {
                adj[a].set(b);
                adj[b].set(a);
            }
    return adj;
}

/// Edges of a sparse random graph, as forbidden pairs of an edge ideal.
std::vector<Bitset> random_edge_ideal(std::size_t n, double density)
{
    std::vector<Bitset> out;
    const auto adj = random_graph(n, density);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (adj[a].test(b))
                out.push_back(Bitset(n).set(a).set(b));
    return out;
}

const AdmissibilityParams kParams{2.0, 1.5, Metric::euclidean};

void BM_AdmissiblePairsSerial(benchmark::State& state)
{
    const auto events = random_events(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::admissible_pairs_serial(events, kParams));
}

void BM_AdmissiblePairsParallel(benchmark::State& state)
{
    const auto events = random_events(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::admissible_pairs_parallel(events, kParams));
}

void BM_CliqueCountsSerial(benchmark::State& state)
{
    const auto adj = random_graph(static_cast<std::size_t>(state.range(0)), 0.3);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::clique_counts_serial(adj));
}

void BM_CliqueCountsParallel(benchmark::State& state)
{
    const auto adj = random_graph(static_cast<std::size_t>(state.range(0)), 0.3);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::clique_counts_parallel(adj));
}

void BM_FreeSetCountsSerial(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto forbidden = random_edge_ideal(n, 0.35);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::free_set_counts_serial(n, forbidden));
}

void BM_FreeSetCountsParallel(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto forbidden = random_edge_ideal(n, 0.35);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::free_set_counts_parallel(n, forbidden));
}

}  // namespace

BENCHMARK(BM_AdmissiblePairsSerial)->Arg(500)->Arg(2000);
BENCHMARK(BM_AdmissiblePairsParallel)->Arg(500)->Arg(2000);
BENCHMARK(BM_CliqueCountsSerial)->Arg(40)->Arg(80);
BENCHMARK(BM_CliqueCountsParallel)->Arg(40)->Arg(80);
BENCHMARK(BM_FreeSetCountsSerial)->Arg(24)->Arg(32);
BENCHMARK(BM_FreeSetCountsParallel)->Arg(24)->Arg(32);

BENCHMARK_MAIN();
