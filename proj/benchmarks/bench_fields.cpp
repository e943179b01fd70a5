#include <benchmark/benchmark.h>

#include <random>

#include "qary/fields.hpp"

using namespace qary;

namespace {

ExtField make_field(int q, int m) {
    if (q == 3 && m == 4) return ExtField({3, 4, {2, 1, 0, 0, 1}});
    return ExtField(default_field_spec(q, m));
}

void BM_ext_mul(benchmark::State& state) {
    ExtField f = make_field(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::uint32_t> pick(1, f.size() - 1);
    ExtScalar a{pick(rng)}, b{pick(rng)};
    for (auto _ : state) {
        a = f.mul(a, b);
        if (a.is_zero()) a = f.one();
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_ext_mul)->Args({2, 3})->Args({2, 5})->Args({3, 3})->Args({3, 4});

void BM_ext_inv(benchmark::State& state) {
    ExtField f = make_field(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    ExtScalar a = f.alpha_pow(3);
    for (auto _ : state) {
        a = f.inv(a);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_ext_inv)->Args({2, 3})->Args({3, 3});

void BM_ext_add(benchmark::State& state) {
    ExtField f = make_field(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    ExtScalar a = f.alpha_pow(2), b = f.alpha_pow(5);
    for (auto _ : state) {
        a = f.add(a, b);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_ext_add)->Args({2, 5})->Args({3, 4});

void BM_field_construction(benchmark::State& state) {
    for (auto _ : state) {
        ExtField f = make_field(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
        benchmark::DoNotOptimize(f.size());
    }
}
BENCHMARK(BM_field_construction)->Args({2, 5})->Args({3, 4});

}  // namespace

BENCHMARK_MAIN();
