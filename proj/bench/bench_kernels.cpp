// Serial reference paths against the compiled and OpenMP kernels.

#include "syllo/catalog.hpp"
#include "syllo/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace syllo;

namespace {

struct Query {
    std::vector<Proposition> premisses;
    std::vector<Proposition> assumptions;
    Proposition conclusion;
    std::vector<TermId> terms;
};

// AAI-4 under the existence of P, over S, M, P and an idle fourth term.
Query sample_query() {
    const TermId& s = term_s();
    const TermId& m = term_m();
    const TermId& p = term_p();
    return {{{PropKind::A, p, m}, {PropKind::A, m, s}},
            {existence_of(p)},
            {PropKind::I, s, p},
            {s, m, p, TermId("Q")}};
}

void BM_SemanticDecideReference(benchmark::State& state) {
    const Query q = sample_query();
    for (auto _ : state) {
        benchmark::DoNotOptimize(semantic_decide(q.premisses, q.assumptions, q.conclusion, q.terms));
    }
}
BENCHMARK(BM_SemanticDecideReference);

void BM_EntailmentCompiled(benchmark::State& state) {
    const Query q = sample_query();
    for (auto _ : state) {
        const Entailment e(q.premisses, q.assumptions, q.conclusion, q.terms);
        benchmark::DoNotOptimize(e.holds());
    }
}
BENCHMARK(BM_EntailmentCompiled);

void BM_EntailmentParallel(benchmark::State& state) {
    const Query q = sample_query();
    for (auto _ : state) {
        const Entailment e(q.premisses, q.assumptions, q.conclusion, q.terms);
        benchmark::DoNotOptimize(e.holds_parallel());
    }
}
BENCHMARK(BM_EntailmentParallel);

void BM_EnumerateSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_all_serial(true));
}
BENCHMARK(BM_EnumerateSerial)->Unit(benchmark::kMillisecond);

void BM_EnumerateParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(true));
}
BENCHMARK(BM_EnumerateParallel)->Unit(benchmark::kMillisecond);

void BM_CountThreeSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(count_valid_nterm_serial(3));
}
BENCHMARK(BM_CountThreeSerial)->Unit(benchmark::kMillisecond);

void BM_CountParallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_valid_nterm(n));
}
BENCHMARK(BM_CountParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(1);

} // namespace

BENCHMARK_MAIN();
