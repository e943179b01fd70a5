#include <benchmark/benchmark.h>

#include "qary/incidence.hpp"
#include "qary/qgraph.hpp"
#include "qary/qmatroid.hpp"

using namespace qary;

namespace {

QMatroid triangle_matroid() {
    auto f = std::make_shared<const ExtField>(default_field_spec(2, 3));
    IncidenceMatrix m = build_incidence(f, family("q_triangle", 2));
    return QMatroid(m.field_ptr(), m.matrix());
}

void BM_rank_uncached(benchmark::State& state) {
    QMatroid base = triangle_matroid();
    std::vector<Subspace> lattice = enumerate_all(7, 2);
    std::size_t i = 0;
    for (auto _ : state) {
        state.PauseTiming();
        QMatroid m(base.field_ptr(), base.matrix());  // fresh memo
        state.ResumeTiming();
        benchmark::DoNotOptimize(m.rank(lattice[i % lattice.size()]));
        i += 131;
    }
}
BENCHMARK(BM_rank_uncached);

void BM_rank_lattice_sweep(benchmark::State& state) {
    QMatroid base = triangle_matroid();
    std::vector<Subspace> lattice = enumerate_all(7, 2);
    for (auto _ : state) {
        QMatroid m(base.field_ptr(), base.matrix());
        std::size_t total = 0;
        for (const Subspace& a : lattice) total += m.rank(a);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_rank_lattice_sweep)->Unit(benchmark::kMillisecond);

void BM_build_incidence(benchmark::State& state) {
    auto f = std::make_shared<const ExtField>(default_field_spec(2, static_cast<int>(state.range(0))));
    QGraph g = family("complete", 2, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        IncidenceMatrix m = build_incidence(f, g);
        benchmark::DoNotOptimize(m.matrix().cols.size());
    }
}
BENCHMARK(BM_build_incidence)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_audit(benchmark::State& state) {
    auto f = std::make_shared<const ExtField>(default_field_spec(2, static_cast<int>(state.range(0))));
    IncidenceMatrix m = build_incidence(f, family("complete", 2, static_cast<int>(state.range(0))));
    for (auto _ : state) {
        AuditReport r = audit(m);
        benchmark::DoNotOptimize(r.ok);
    }
}
BENCHMARK(BM_audit)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
