#include <benchmark/benchmark.h>

#include <mixedcode/mixedcode.hpp>

#include <string>

using namespace mixedcode;

namespace {

std::string data(const char* name) { return std::string(MIXEDCODE_BENCH_DATA) + "/" + name; }

const MixedMatrix& example1() {
    static const MixedMatrix g = parse_matrix(read_text_file(data("example1.mtx")));
    return g;
}

const CyclicGenerators& example3() {
    static const CyclicGenerators g = parse_generators(read_text_file(data("example3.gen")));
    return g;
}

void BM_StandardForm(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(standard_form(example1()));
}
BENCHMARK(BM_StandardForm);

void BM_StandardFormCyclic(benchmark::State& state) {
    const MixedMatrix m = spanning_set(example3()).matrix;
    for (auto _ : state) benchmark::DoNotOptimize(standard_form(m));
}
BENCHMARK(BM_StandardFormCyclic);

void BM_Enumerate(benchmark::State& state) {
    const StandardForm sf = standard_form(example1());
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_codewords(sf));
    state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_Enumerate);

void BM_SpanClosure(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(span_closure(example1()));
}
BENCHMARK(BM_SpanClosure);

void BM_ParityCheck(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(parity_check_matrix(example1()));
}
BENCHMARK(BM_ParityCheck);

void BM_BruteForceDual(benchmark::State& state) {
    const CodewordSet c = span_closure(example1());
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_dual(c));
}
BENCHMARK(BM_BruteForceDual)->Unit(benchmark::kMillisecond);

void BM_MinDistance(benchmark::State& state) {
    const CodewordSet c = span_closure(example1());
    for (auto _ : state) benchmark::DoNotOptimize(min_gray_distance(c));
}
BENCHMARK(BM_MinDistance);

void BM_ValidateGenerators(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(validate_generators(example3()));
}
BENCHMARK(BM_ValidateGenerators);

void BM_SpanningSet(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(spanning_set(example3()));
}
BENCHMARK(BM_SpanningSet);

void BM_DistanceSearch(benchmark::State& state) {
    const MixedMatrix m = spanning_set(example3()).matrix;
    for (auto _ : state) benchmark::DoNotOptimize(search_min_gray_distance(m, 0, state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DistanceSearch)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
