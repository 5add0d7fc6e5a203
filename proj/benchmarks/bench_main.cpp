#include <benchmark/benchmark.h>

#include "bmg/bmg.hpp"

using namespace bmg;

static void BM_BmgFromTree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto t = random_colored_tree(n, 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(bmg_from_tree(t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BmgFromTree)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_RecognizeBmg(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = bmg_from_tree(random_colored_tree(n, 4, 2));
  for (auto _ : state) benchmark::DoNotOptimize(recognize_bmg(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RecognizeBmg)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_RecognizeViaAho(benchmark::State& state) {
  auto g = bmg_from_tree(random_colored_tree(static_cast<std::size_t>(state.range(0)), 4, 3));
  for (auto _ : state) benchmark::DoNotOptimize(recognize_bmg_via_aho(g));
}
BENCHMARK(BM_RecognizeViaAho)->Arg(32)->Arg(64);

static void BM_ScanForbidden(benchmark::State& state) {
  auto base = bmg_from_tree(random_colored_tree(static_cast<std::size_t>(state.range(0)), 2, 4));
  auto g = perturb(base, 3, 4, EditMode::Editing).graph;
  for (auto _ : state) benchmark::DoNotOptimize(scan_forbidden_subgraphs(g));
}
BENCHMARK(BM_ScanForbidden)->Arg(12)->Arg(24);

static void BM_SolveExact(benchmark::State& state) {
  auto base = bmg_from_tree(random_colored_tree(static_cast<std::size_t>(state.range(0)), 2, 5));
  auto g = perturb(base, 2, 5, EditMode::Editing).graph;
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact(g, EditMode::Editing));
}
BENCHMARK(BM_SolveExact)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_BuildModel(benchmark::State& state) {
  auto g = bmg_from_tree(random_colored_tree(static_cast<std::size_t>(state.range(0)), 2, 6));
  for (auto _ : state) benchmark::DoNotOptimize(build_model(g, EditMode::Editing, Formulation::TwoColor));
}
BENCHMARK(BM_BuildModel)->Arg(8)->Arg(16);

static void BM_Catalog(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_forbidden_classes());
}
BENCHMARK(BM_Catalog)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
