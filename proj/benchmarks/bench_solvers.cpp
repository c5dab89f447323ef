#include <benchmark/benchmark.h>

#include "chromstab/chromatic.hpp"
#include "chromstab/constructions.hpp"
#include "chromstab/stability.hpp"
#include "chromstab/verify.hpp"

namespace {

using namespace chromstab;

void BM_ChromaticPetersen(benchmark::State& state) {
  const Graph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g).chi);
}
BENCHMARK(BM_ChromaticPetersen);

void BM_VertexStabilityGnk23(benchmark::State& state) {
  const Graph g = gnk(2, 3).graph;
  for (auto _ : state) benchmark::DoNotOptimize(vertex_stability(g).value);
}
BENCHMARK(BM_VertexStabilityGnk23)->Unit(benchmark::kMillisecond);

void BM_IndependentStabilityGnk24(benchmark::State& state) {
  const Graph g = gnk(2, 4).graph;
  for (auto _ : state) benchmark::DoNotOptimize(independent_vertex_stability(g).value);
}
BENCHMARK(BM_IndependentStabilityGnk24)->Unit(benchmark::kMillisecond);

void BM_EdgeStabilityPetersen(benchmark::State& state) {
  const Graph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(edge_stability(g).value);
}
BENCHMARK(BM_EdgeStabilityPetersen)->Unit(benchmark::kMicrosecond);

void BM_BoundsCorpus(benchmark::State& state) {
  const Corpus corpus = Corpus::enumeration(static_cast<int>(state.range(0)),
                                            static_cast<int>(state.range(0)));
  const CheckId checks[] = {CheckId::bounds};
  for (auto _ : state) benchmark::DoNotOptimize(run_corpus(corpus, checks).size());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
}
BENCHMARK(BM_BoundsCorpus)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
