#include <benchmark/benchmark.h>

#include <bhzeta/cyclotomic.hpp>
#include <bhzeta/invertible.hpp>
#include <bhzeta/monodromy.hpp>
#include <bhzeta/survey.hpp>
#include <bhzeta/zeta.hpp>

using namespace bhzeta;

namespace {

const std::vector<Int> kChain = {3, 4, 5, 6};

void BM_ZetaClosedChain(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(zeta_chain(kChain));
}
BENCHMARK(BM_ZetaClosedChain);

void BM_ZetaOracle(benchmark::State& state) {
    WeightSystem ws = chain_weights(kChain);
    for (auto _ : state) benchmark::DoNotOptimize(milnor_orlik_zeta(ws, kChain.size()));
}
BENCHMARK(BM_ZetaOracle);

void BM_SeriesExpand(benchmark::State& state) {
    CyclotomicFunction z = zeta_chain(kChain).reduce();
    for (auto _ : state) benchmark::DoNotOptimize(z.series_expand(state.range(0)));
}
BENCHMARK(BM_SeriesExpand)->Arg(64)->Arg(256)->Arg(1024);

void BM_SolveCongruenceSmall(benchmark::State& state) {
    // brute force territory: k^n stays tiny
    InvertiblePolynomial f =
        InvertiblePolynomial::from_matrix({{3, 1, 0}, {0, 4, 1}, {0, 0, 5}});
    for (auto _ : state) benchmark::DoNotOptimize(solve_congruence(f.E, 4));
}
BENCHMARK(BM_SolveCongruenceSmall);

void BM_SolveCongruenceLarge(benchmark::State& state) {
    // modulus large enough that only the elimination engine runs
    InvertiblePolynomial f = InvertiblePolynomial::from_matrix(
        {{7, 1, 0, 0}, {0, 8, 1, 0}, {0, 0, 9, 1}, {0, 0, 0, 10}});
    for (auto _ : state) benchmark::DoNotOptimize(solve_congruence(f.E, 2520));
}
BENCHMARK(BM_SolveCongruenceLarge);

void BM_EnumerateRoots(benchmark::State& state) {
    CyclotomicFunction z = zeta_chain({3, 4, 5}).reduce();
    for (auto _ : state) benchmark::DoNotOptimize(z.enumerate_roots(4, state.range(0)));
}
BENCHMARK(BM_EnumerateRoots)->Arg(2)->Arg(3);

void BM_CanonicalRoot(benchmark::State& state) {
    CyclotomicFunction z = zeta_chain({3, 4, 5}).reduce();
    for (auto _ : state) benchmark::DoNotOptimize(z.canonical_root(4));
}
BENCHMARK(BM_CanonicalRoot);

void BM_SurveyTheorem2(benchmark::State& state) {
    ScanConfig cfg;
    cfg.n = 3;
    cfg.min_exp = 2;
    cfg.max_exp = 3;
    cfg.check = "theorem2";
    cfg.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(scan(cfg));
}
BENCHMARK(BM_SurveyTheorem2)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
