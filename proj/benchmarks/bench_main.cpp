#include <benchmark/benchmark.h>

#include "bessel/dual.hpp"
#include "bessel/hopf.hpp"
#include "bessel/operad.hpp"
#include "bessel/poset.hpp"

using namespace bessel;

static void BM_EnumerateForests(benchmark::State& state) {
  const LabelSet l = numbered_labels(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_forests(l));
}
BENCHMARK(BM_EnumerateForests)->DenseRange(3, 7);

static void BM_ComposeComb(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Element x = Element::basis(Forest({comb_tree(numbered_labels(n))}));
  std::vector<Label> js;
  for (std::size_t i = 0; i < n; ++i) js.emplace_back("j" + std::to_string(i));
  const Element y = Element::basis(Forest({comb_tree(make_label_set(js))}));
  for (auto _ : state) benchmark::DoNotOptimize(operad::compose(x, Label("1"), y));
}
BENCHMARK(BM_ComposeComb)->DenseRange(2, 4);

// Explicit formula, bypassing the memo table by rebuilding the forest text.
static void BM_CoproductGenerators(benchmark::State& state) {
  const LabelSet l = numbered_labels(static_cast<std::size_t>(state.range(0)));
  const Element x = Element::basis(Forest({comb_tree(l)}));
  for (auto _ : state) benchmark::DoNotOptimize(hopf::coproduct_via_generators(x));
}
BENCHMARK(BM_CoproductGenerators)->DenseRange(3, 5);

static void BM_GammaAllSubsets(benchmark::State& state) {
  const LabelSet l = numbered_labels(static_cast<std::size_t>(state.range(0)));
  const Forest f({comb_tree(l)});
  const auto vs = inner_vertices(f);
  for (auto _ : state) {
    for (std::size_t m = 0; m < (std::size_t{1} << vs.size()); ++m) {
      std::vector<VertexId> v;
      for (std::size_t i = 0; i < vs.size(); ++i)
        if (m >> i & 1) v.push_back(vs[i]);
      benchmark::DoNotOptimize(poset::gamma(f, v));
    }
  }
}
BENCHMARK(BM_GammaAllSubsets)->DenseRange(3, 6);

static void BM_HasseDiagram(benchmark::State& state) {
  const LabelSet l = numbered_labels(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(poset::hasse(l));
}
BENCHMARK(BM_HasseDiagram)->DenseRange(3, 4);

static void BM_PathProduct(benchmark::State& state) {
  const LabelSet l = numbered_labels(static_cast<std::size_t>(state.range(0)));
  std::vector<Label> path(l.begin(), l.begin() + 4);
  for (auto _ : state) benchmark::DoNotOptimize(dual::path_product(l, path));
}
BENCHMARK(BM_PathProduct)->DenseRange(4, 6);

static void BM_GenerationRank(benchmark::State& state) {
  const LabelSet l = numbered_labels(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dual::generation_rank(l, 2));
}
BENCHMARK(BM_GenerationRank)->DenseRange(3, 5);

BENCHMARK_MAIN();
