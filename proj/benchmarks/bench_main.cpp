#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "lgraph/accommodating.hpp"
#include "lgraph/dynamics.hpp"
#include "lgraph/partition.hpp"
#include "lgraph/term.hpp"

using namespace lgraph;

namespace {

const std::vector<LabelledGraph>& graphs() {
  static const std::vector<LabelledGraph> g = gen::corpus(99, 32, {6, 3, 3}, true);
  return g;
}

void BM_PartitionTower(benchmark::State& state) {
  for (auto _ : state)
    for (const auto& g : graphs()) benchmark::DoNotOptimize(PartitionTower(g).stabilization_depth());
}
BENCHMARK(BM_PartitionTower);

void BM_BarFamily(benchmark::State& state) {
  for (auto _ : state)
    for (const auto& g : graphs()) benchmark::DoNotOptimize(bar_accommodating(g).size());
}
BENCHMARK(BM_BarFamily);

void BM_Disagreeable(benchmark::State& state) {
  const auto lmax = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    for (const auto& g : graphs()) benchmark::DoNotOptimize(is_disagreeable(g, lmax).verdict);
}
BENCHMARK(BM_Disagreeable)->Arg(4)->Arg(8);

void BM_Cofinality(benchmark::State& state) {
  for (auto _ : state)
    for (const auto& g : graphs()) benchmark::DoNotOptimize(is_strongly_cofinal(g).verdict);
}
BENCHMARK(BM_Cofinality);

void BM_TermMultiply(benchmark::State& state) {
  const LabelledGraph g = fixtures::grading();
  const AccommodatingSet bar = bar_accommodating(g);
  const TermAlgebra alg(bar);
  TermSum x;
  for (VertexSet a : bar.members()) x += alg.projection(a);
  const TermSum y = alg.expand_level(x, 2);
  for (auto _ : state) benchmark::DoNotOptimize(alg.multiply(y, alg.adjoint(y)).size());
}
BENCHMARK(BM_TermMultiply);

}  // namespace

BENCHMARK_MAIN();
