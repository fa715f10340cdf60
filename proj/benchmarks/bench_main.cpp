#include <benchmark/benchmark.h>

#include <vector>

#include "biheyt/biheyt.hpp"

using namespace biheyt;

static void BM_FreeAlgebra(benchmark::State& state) {
  const std::vector<BiHeytingAlgebra> gens{chain_algebra(3)};
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(free_algebra(gens, n).algebra.size());
}
BENCHMARK(BM_FreeAlgebra)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_EnumeratePosets(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_posets(n).size());
}
BENCHMARK(BM_EnumeratePosets)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_Homomorphisms(benchmark::State& state) {
  const std::vector<BiHeytingAlgebra> gens{chain_algebra(3)};
  const auto f1 = free_algebra(gens, 1).algebra;
  const auto source = product(chain_algebra(3), f1);
  for (auto _ : state) benchmark::DoNotOptimize(homomorphisms(source, f1).size());
}
BENCHMARK(BM_Homomorphisms)->Unit(benchmark::kMillisecond);

static void BM_Congruences(benchmark::State& state) {
  BiHeytingAlgebra a = chain_algebra(2);
  for (int i = 1; i < state.range(0); ++i) a = product(a, chain_algebra(3));
  for (auto _ : state) benchmark::DoNotOptimize(congruences(a).size());
}
BENCHMARK(BM_Congruences)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_RuleOnProducts(benchmark::State& state) {
  const auto family = upset_algebras_times_two(static_cast<std::size_t>(state.range(0)));
  const Rule r = middle_element_rule();
  for (auto _ : state) benchmark::DoNotOptimize(valid_in_all(family, r).holds);
}
BENCHMARK(BM_RuleOnProducts)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
