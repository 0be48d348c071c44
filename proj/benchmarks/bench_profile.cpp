#include <benchmark/benchmark.h>

#include "qsig/linkclass.hpp"
#include "qsig/profile.hpp"

namespace {

using namespace qsig;

SeifertMatrix trefoil() {
    RationalMatrix a(2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 1;
    a.at(1, 1) = 1;
    return SeifertMatrix(std::move(a), 1);
}

// Deterministic small rationals, enough spread to hit nontrivial profiles.
SeifertMatrix pseudo_random(long dim, int parity, unsigned seed) {
    unsigned s = seed * 2654435761u + 1;
    const auto next = [&s] {
        s = s * 1664525u + 1013904223u;
        return (s >> 16) % 7;
    };
    RationalMatrix a(dim, dim);
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j)
            a.at(i, j) = make_rational(Integer(static_cast<long>(next()) - 3),
                                       Integer(1 + static_cast<long>(next() % 3)));
    return SeifertMatrix(std::move(a), parity);
}

void BM_profile_trefoil(benchmark::State& state) {
    const SeifertMatrix a = trefoil();
    for (auto _ : state)
        benchmark::DoNotOptimize(signature_profile(a));
}
BENCHMARK(BM_profile_trefoil);

void BM_profile_dim4(benchmark::State& state) {
    const SeifertMatrix a = pseudo_random(4, state.range(0) == 0 ? 1 : -1, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(signature_profile(a));
}
BENCHMARK(BM_profile_dim4)->Arg(0)->Arg(1);

void BM_profile_parallel_trefoil(benchmark::State& state) {
    const SeifertMatrix a =
        reparam_matrix(trefoil(), SignTuple::uniform(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(signature_profile(a));
}
BENCHMARK(BM_profile_parallel_trefoil)->Arg(2)->Arg(4)->Arg(8);

void BM_branched_signatures_d24(benchmark::State& state) {
    const SeifertMatrix a = pseudo_random(4, 1, 11);
    for (auto _ : state) {
        long total = 0;
        for (long k = 0; k < 24; ++k)
            total += branched_signature(a, k, 24);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_branched_signatures_d24);

void BM_alexander_16x16(benchmark::State& state) {
    const SeifertMatrix a =
        reparam_matrix(pseudo_random(4, 1, 3), SignTuple::uniform(4));
    for (auto _ : state)
        benchmark::DoNotOptimize(alexander(a));
}
BENCHMARK(BM_alexander_16x16);

void BM_delta_reparametrized(benchmark::State& state) {
    const SignatureProfile prof = signature_profile(trefoil());
    const Angle theta = Angle::from_tangent_half(tan_of_half(make_rational(1, 5)), 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(delta_reparametrized(prof, 3, theta));
}
BENCHMARK(BM_delta_reparametrized);

void BM_csum_profile_c3(benchmark::State& state) {
    const SeifertMatrix m = csum_matrix_q1(trefoil(), trefoil(), Integer(3));
    for (auto _ : state)
        benchmark::DoNotOptimize(signature_profile(m));
}
BENCHMARK(BM_csum_profile_c3);

} // namespace

BENCHMARK_MAIN();
