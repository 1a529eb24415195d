#include <benchmark/benchmark.h>

#include <random>

#include "fingeo/solvers.hpp"

using namespace fingeo;

static void BM_FieldMul(benchmark::State& state) {
  auto f = GaloisField::of_order(static_cast<std::uint64_t>(state.range(0)));
  std::mt19937 rng(1);
  std::vector<Elem> xs(1024);
  for (auto& x : xs) x = rng() % f->q();
  Elem acc = 1;
  for (auto _ : state) {
    for (auto x : xs) acc = f->mul(acc | 1, x | 1);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_FieldMul)->Arg(16)->Arg(127)->Arg(729)->Arg(65536);

static void BM_EnumerateSubspaces(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto q = static_cast<std::uint64_t>(state.range(1));
  const int m = static_cast<int>(state.range(2));
  for (auto _ : state) {
    auto s = ProjectiveSpace::make(n, q);  // fresh space: no cache
    benchmark::DoNotOptimize(s->subspaces(m).size());
  }
}
BENCHMARK(BM_EnumerateSubspaces)->Args({3, 3, 1})->Args({3, 4, 2})->Args({4, 3, 2})->Args({4, 5, 1})
    ->Unit(benchmark::kMillisecond);

static void BM_ExactTau(benchmark::State& state) {
  const auto h = ProjectiveSpace::make(3, static_cast<std::uint64_t>(state.range(0)))->build_hypergraph(2);
  for (auto _ : state) benchmark::DoNotOptimize(exact_tau(h, 2).objective);
}
BENCHMARK(BM_ExactTau)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_ExactUcn(benchmark::State& state) {
  const auto h = ProjectiveSpace::make(2, static_cast<std::uint64_t>(state.range(0)))->build_hypergraph(1);
  for (auto _ : state) benchmark::DoNotOptimize(exact_ucn(h).objective);
}
BENCHMARK(BM_ExactUcn)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_TModPWalk(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_tmodp_theorem(3, 2, 13).sets.size());
}
BENCHMARK(BM_TModPWalk)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
