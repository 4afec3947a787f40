#include <benchmark/benchmark.h>

#include "twcolor/coloring.hpp"
#include "twcolor/constructions.hpp"
#include "twcolor/enumerate.hpp"
#include "twcolor/fractional.hpp"
#include "twcolor/prng.hpp"
#include "twcolor/treewidth.hpp"

namespace {

twc::Graph random_graph(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
    twc::SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_below(den) < num) e.emplace_back(u, v);
    return twc::build_graph(n, e);
}

void bm_treewidth_exact(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    twc::Graph g = twc::random_partial_ktree(n, 4, twc::Rational(3, 4), 11);
    for (auto _ : state) benchmark::DoNotOptimize(twc::treewidth_exact(g).width);
}
BENCHMARK(bm_treewidth_exact)->Arg(12)->Arg(16)->Arg(20);

void bm_vizing_color(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    twc::Graph g = random_graph(n, 1, 2, 23);
    for (auto _ : state) benchmark::DoNotOptimize(twc::vizing_color(g).colors);
}
BENCHMARK(bm_vizing_color)->Arg(20)->Arg(40)->Arg(60);

void bm_chi_prime_exact(benchmark::State& state) {
    twc::Graph g = twc::construct_apex(5, 2);
    for (auto _ : state) benchmark::DoNotOptimize(twc::chi_prime_exact(g));
}
BENCHMARK(bm_chi_prime_exact);

void bm_fractional_odd_sets(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    twc::Graph g = random_graph(n, 1, 2, 29);
    for (auto _ : state) benchmark::DoNotOptimize(twc::fractional_chi_prime(g).value);
}
BENCHMARK(bm_fractional_odd_sets)->Arg(12)->Arg(15)->Arg(18);

void bm_fractional_lp(benchmark::State& state) {
    twc::Graph g = random_graph(8, 1, 3, 31);
    for (auto _ : state) benchmark::DoNotOptimize(twc::fractional_via_lp(g));
}
BENCHMARK(bm_fractional_lp);

void bm_enumerate_classes(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long count = twc::for_each_graph(n, [](const twc::Graph&) {});
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(bm_enumerate_classes)->Arg(5)->Arg(6)->Arg(7);

} // namespace

BENCHMARK_MAIN();
