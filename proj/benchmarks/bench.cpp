#include <benchmark/benchmark.h>

#include "polyfun/derivative.hpp"
#include "polyfun/dpb.hpp"
#include "polyfun/localization.hpp"
#include "polyfun/random.hpp"
#include "polyfun/terms.hpp"

namespace {

using namespace polyfun;

// p: fibres of sizes 0..k-1 over a one-point base of k elements.
DiagMap staircase(std::size_t k) {
  PosetPtr point = FinPoset::point();
  Function f;
  for (std::size_t b = 0; b < k; ++b) f.insert(f.end(), b, b);
  return DiagMap(Diagram::constant(point, f.size()), Diagram::constant(point, k), {f});
}

SliceObj constant_over(const Diagram& base, std::size_t n) {
  Diagram x = Diagram::constant(base.poset(), n * base.total_size());
  Function f(x.size(0));
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = i / n;
  return SliceObj{DiagMap(x, base, {f})};
}

void BM_Pi(benchmark::State& state) {
  DiagMap p = staircase(static_cast<std::size_t>(state.range(0)));
  SliceObj x = constant_over(p.dom(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(pi(p, x).total().total_size());
}
BENCHMARK(BM_Pi)->DenseRange(3, 6);

void BM_Negation(benchmark::State& state) {
  DiagMap p = staircase(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(negate(p).complement.total_size());
}
BENCHMARK(BM_Negation)->DenseRange(3, 6);

void BM_NFibre(benchmark::State& state) {
  DiagMap p = staircase(5);
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(n_fibre_pullback(p, n).term_base.total_size());
}
BENCHMARK(BM_NFibre)->DenseRange(0, 3);

void BM_ExtensionEval(benchmark::State& state) {
  Polynomial poly = Polynomial::one_variable(staircase(4));
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(extension_size(poly, n));
}
BENCHMARK(BM_ExtensionEval)->DenseRange(1, 4);

void BM_Derivative(benchmark::State& state) {
  Polynomial poly = Polynomial::one_variable(staircase(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(derivative(poly).decidable);
}
BENCHMARK(BM_Derivative)->DenseRange(3, 5);

void BM_RandomDiagram(benchmark::State& state) {
  Rng rng(1);
  std::vector<PosetPtr> posets = small_posets();
  for (auto _ : state) {
    for (const auto& poset : posets) benchmark::DoNotOptimize(random_diagram(poset, rng, 4));
  }
}
BENCHMARK(BM_RandomDiagram);

}  // namespace

BENCHMARK_MAIN();
