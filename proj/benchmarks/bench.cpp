#include "rblie/free_lie.hpp"
#include "rblie/group_rb.hpp"
#include "rblie/rota_baxter.hpp"
#include "rblie/sampling.hpp"

#include <benchmark/benchmark.h>

using namespace rblie;

namespace {

LinearOperator split_first(const LieAlgebra& g) {
    Mat a = {unit_vec(g.dim(), 0)};
    Mat b;
    for (int i = 1; i < g.dim(); ++i) b.push_back(unit_vec(g.dim(), i));
    return splitting_rb(g, Subspace::span(g.dim(), a), Subspace::span(g.dim(), b));
}

void bench_bch_free24(benchmark::State& state) {
    LieAlgebra g = build_free_nilpotent(2, 4);
    BCHGroup grp(g);
    RationalSampler s(123);
    Vec x = s.vec(g.dim()), y = s.vec(g.dim());
    for (auto _ : state) benchmark::DoNotOptimize(grp.mul(x, y));
}
BENCHMARK(bench_bch_free24);

void bench_integrate_hopf(benchmark::State& state) {
    LieAlgebra g = build_free_nilpotent(2, 4);
    RBLieAlgebra src(g, split_first(g));
    RBGroupOperator op(src);
    RationalSampler s(123);
    Vec x = s.vec(g.dim());
    for (auto _ : state) benchmark::DoNotOptimize(op.via_hopf(x));
}
BENCHMARK(bench_integrate_hopf);

void bench_integrate_magnus(benchmark::State& state) {
    LieAlgebra g = build_free_nilpotent(2, 4);
    RBLieAlgebra src(g, split_first(g));
    RBGroupOperator op(src);
    RationalSampler s(123);
    Vec x = s.vec(g.dim());
    for (auto _ : state) benchmark::DoNotOptimize(op.via_magnus(x));
}
BENCHMARK(bench_integrate_magnus);

void bench_free_nilpotent_build(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(build_free_nilpotent(2, static_cast<int>(state.range(0))));
}
BENCHMARK(bench_free_nilpotent_build)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
