#include <benchmark/benchmark.h>

#include "polylock/classify.hpp"
#include "polylock/io.hpp"
#include "polylock/packing.hpp"
#include "polylock/search.hpp"
#include "polylock/separation.hpp"

using namespace polylock;

namespace {

PackingParams dense_params() {
  PackingParams p;
  p.min_density = 0.5;
  p.shapes = shape_pool(5, 5);
  for (const Polyomino& u : fixed_orientations(u_pentomino())) p.shapes.push_back(u);
  p.pocket_fill_bias = 0.8;
  return p;
}

// 4x4 tray: frame, key in one corner, fourteen unit blocks, hole in the other.
Configuration tray() {
  return parse_config("######\n#abc.#\n#defg#\n#hijk#\n#Klmn#\n######\n");
}

void BM_EnumerateFree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_free(n));
}
BENCHMARK(BM_EnumerateFree)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);

void BM_BlockingGraph(benchmark::State& state) {
  const Configuration c = random_packing(dense_params(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(blocking_graph(c, Direction::PosX));
}
BENCHMARK(BM_BlockingGraph)->Unit(benchmark::kMicrosecond);

void BM_SeparateLe5(benchmark::State& state) {
  const Configuration c = random_packing(dense_params(), static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(separate_le5(c));
}
BENCHMARK(BM_SeparateLe5)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_KeySearch(benchmark::State& state) {
  const Configuration c = tray();
  SearchBudget b;
  b.radius = 3;
  b.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(key_piece_reachable(c, "K", {3, 3}, b));
}
BENCHMARK(BM_KeySearch)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EscapeSearchSubset(benchmark::State& state) {
  const Configuration c = tray();
  SearchBudget b;
  b.radius = 2;
  b.mode = MoveMode::SubsetMove;
  b.max_subset = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(escape_search(c, b));
}
BENCHMARK(BM_EscapeSearchSubset)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
