#include <benchmark/benchmark.h>

#include <random>

#include "hochbv/bv.hpp"

using namespace hochbv;

namespace {

F2Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution bit(0.5);
    F2Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (bit(rng)) m.set(i, j, true);
    return m;
}

void BM_RowReduce256(benchmark::State& state) {
    F2Matrix m = random_matrix(256, 256, 7);
    for (auto _ : state) {
        F2Matrix work = m;
        auto pivots = row_reduce(work);
        benchmark::DoNotOptimize(pivots);
    }
}
BENCHMARK(BM_RowReduce256);

void BM_TetrahedralDifferential(benchmark::State& state) {
    DgAlgebra C = make_sphere_cochain_algebra();
    HipContext ctx(C, free_bimodule(C), 4);
    HomotopyInnerProduct F = ctx.expand_pattern(builtin_hip("sphere-cochain"), 4);
    for (auto _ : state) {
        HomotopyInnerProduct dF = ctx.differential(F);
        benchmark::DoNotOptimize(dF.comps.size());
    }
}
BENCHMARK(BM_TetrahedralDifferential);

void BM_SphereCohomologyWindow(benchmark::State& state) {
    DgAlgebra H = make_sphere_cohomology();
    CochainComplex cc(H, free_bimodule(H), 8);
    for (auto _ : state) {
        HHBasis h = hh_basis(cc, -2, 3);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_SphereCohomologyWindow);

void BM_ZOperator(benchmark::State& state) {
    DgAlgebra H = make_sphere_cohomology();
    HipContext ctx(H, free_bimodule(H), 8);
    HomotopyInnerProduct F = ctx.expand_pattern(builtin_hip("sphere-tilde"), 2);
    HochschildCochain psi3 = ctx.coefficients().single(
        Word(3, 0), static_cast<std::size_t>(H.index_of("s")));
    for (auto _ : state) {
        HochschildCochain z = ctx.z_operator(F, psi3);
        benchmark::DoNotOptimize(z.comps.size());
    }
}
BENCHMARK(BM_ZOperator);

} // namespace

BENCHMARK_MAIN();
