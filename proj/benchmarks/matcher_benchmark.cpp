#include <benchmark/benchmark.h>

#include <random>

#include "relmatch/closure.hpp"
#include "relmatch/quantitative.hpp"
#include "relmatch/simulation.hpp"
#include "relmatch/subsequence.hpp"
#include "relmatch/supersequence.hpp"
#include "relmatch/workload.hpp"

namespace {

using namespace relmatch;

constexpr Symbol kSigma = 16;
constexpr std::uint64_t kSeed = 42;

Word text(std::size_t len) {
  std::mt19937_64 rng(kSeed);
  return random_word(len, 1, kSigma - 1, rng);
}

void BM_LinearSubsequence(benchmark::State& state) {
  const Nfa a = bench_automaton(static_cast<std::size_t>(state.range(0)), kSigma, kSeed);
  const Word w = text(static_cast<std::size_t>(state.range(1)));
  const TransitionIndex index(a);
  SubsequenceMatcher m(index);
  for (auto _ : state) benchmark::DoNotOptimize(m.match(w));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.size()));
}

void BM_LinearSupersequence(benchmark::State& state) {
  const Nfa a = bench_automaton(static_cast<std::size_t>(state.range(0)), kSigma, kSeed);
  const Word w = text(static_cast<std::size_t>(state.range(1)));
  SupersequenceMatcher m(a);
  for (auto _ : state) benchmark::DoNotOptimize(m.match(w));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.size()));
}

template <bool kUpward>
void BM_Baseline(benchmark::State& state) {
  const Nfa a = bench_automaton(static_cast<std::size_t>(state.range(0)), kSigma, kSeed);
  const Word w = text(static_cast<std::size_t>(state.range(1)));
  const TransitionIndex index(kUpward ? upward_automaton(a) : downward_automaton(a));
  for (auto _ : state) benchmark::DoNotOptimize(simulate_membership(index, w));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.size()));
}

void BM_QuantitativeMin(benchmark::State& state) {
  std::mt19937_64 rng(kSeed);
  const Nfa a = trim(random_nfa(64, 4, static_cast<std::size_t>(state.range(0)), 0.1, rng));
  const Word w = random_word(static_cast<std::size_t>(state.range(1)), 1, 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(quantitative_match(a, w, Relation::kSupersequence, Optimum::kMin));
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int m : {1 << 10, 1 << 14}) {
    for (int len : {1 << 16, 1 << 18, 1 << 20}) b->Args({m, len});
  }
}

}  // namespace

BENCHMARK(BM_LinearSubsequence)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LinearSupersequence)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Baseline<true>)->Name("BM_BaselineSubsequence")->Args({1 << 10, 1 << 16})->Args({1 << 14, 1 << 16})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Baseline<false>)->Name("BM_BaselineSupersequence")->Args({1 << 10, 1 << 16})->Args({1 << 14, 1 << 16})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuantitativeMin)->Args({256, 256})->Args({256, 1024})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
