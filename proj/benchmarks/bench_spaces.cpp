#include <benchmark/benchmark.h>

#include <random>

#include "qary/qgraph.hpp"
#include "qary/spaces.hpp"

using namespace qary;

namespace {

MatFq random_matrix(std::size_t rows, std::size_t cols, int q, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, q - 1);
    MatFq m;
    m.cols = cols;
    m.rows.assign(rows, VecFq(cols, 0));
    for (auto& r : m.rows)
        for (auto& e : r) e = pick(rng);
    return m;
}

void BM_rref(benchmark::State& state) {
    MatFq m = random_matrix(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)),
                            static_cast<int>(state.range(2)), 5);
    for (auto _ : state) {
        MatFq r = rref(m, static_cast<int>(state.range(2)));
        benchmark::DoNotOptimize(r.rows.data());
    }
}
BENCHMARK(BM_rref)->Args({4, 7, 2})->Args({8, 16, 2})->Args({4, 7, 3});

void BM_sum_intersect(benchmark::State& state) {
    Subspace a(2, 7, random_matrix(3, 7, 2, 7).rows);
    Subspace b(2, 7, random_matrix(3, 7, 2, 8).rows);
    for (auto _ : state) {
        Subspace s = sum(a, b);
        Subspace i = intersect(a, b);
        benchmark::DoNotOptimize(s.dim() + i.dim());
    }
}
BENCHMARK(BM_sum_intersect);

void BM_enumerate_subspaces(benchmark::State& state) {
    for (auto _ : state) {
        auto all = enumerate_subspaces(static_cast<std::size_t>(state.range(0)),
                                       static_cast<std::size_t>(state.range(1)), 2);
        benchmark::DoNotOptimize(all.size());
    }
}
BENCHMARK(BM_enumerate_subspaces)->Args({5, 2})->Args({7, 3});

void BM_closure_star(benchmark::State& state) {
    QGraph seed = family("star_seed", 2, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        QGraph g = closure(seed.q(), seed.v(), seed.edges());
        benchmark::DoNotOptimize(g.edges().size());
    }
}
BENCHMARK(BM_closure_star)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
