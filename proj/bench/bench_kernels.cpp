// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "stone/enumerate.hpp"
#include "stone/fuzz.hpp"
#include "stone/galois.hpp"
#include "stone/graph_pairs.hpp"

using namespace stone;

namespace {

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) ? "parallel" : "serial"); }

void BM_IsFrame(benchmark::State& state) {
  auto l = downset_lattice(FinitePoset::antichain(7)).lattice;  // 128 elements
  for (auto _ : state) benchmark::DoNotOptimize(is_frame(*l, mode(state)).distributive);
  label(state);
}

void BM_IsAdjointPair(benchmark::State& state) {
  auto gc = compile(MultiplicityInclusion::make({{1, 0, 1, 0, 0, 1, 0, 1, 1},
                                                  {0, 1, 1, 0, 1, 0, 0, 0, 1},
                                                  {1, 1, 0, 1, 0, 0, 1, 0, 0},
                                                  {0, 0, 0, 1, 1, 1, 0, 1, 0},
                                                  {1, 0, 0, 0, 0, 1, 1, 0, 1},
                                                  {0, 1, 0, 1, 0, 0, 0, 1, 1},
                                                  {0, 0, 1, 0, 1, 0, 1, 1, 0}}))
                .data.gc;
  for (auto _ : state) benchmark::DoNotOptimize(is_adjoint_pair(gc.lower(), gc.upper(), mode(state)));
  label(state);
}

void BM_JPairs(benchmark::State& state) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t v = 0; v + 1 < 18; ++v) edges.emplace_back(v, v + 1);
  auto g = FiniteGraph::make(18, edges);
  for (auto _ : state) benchmark::DoNotOptimize(j_pairs(g, j_x(g), mode(state)).pairs.size());
  label(state);
}

void BM_Sweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_theorem("T42", 300, 3, mode(state)).violations);
  label(state);
}

}  // namespace

BENCHMARK(BM_IsFrame)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsAdjointPair)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JPairs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
