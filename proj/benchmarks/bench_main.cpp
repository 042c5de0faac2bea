#include <benchmark/benchmark.h>

#include "graphicable/algebra.hpp"
#include "graphicable/analysis.hpp"
#include "graphicable/embeddings.hpp"
#include "graphicable/families.hpp"

using namespace graphicable;

namespace {

void BM_IsomorphismFlowerJ5(benchmark::State& state) {
  const Graph law = graph_from_algebra(family_law(family::FlowerJ5{}));
  const Graph built = flower_snark_construction(5);
  for (auto _ : state) benchmark::DoNotOptimize(is_isomorphic(law, built));
}
BENCHMARK(BM_IsomorphismFlowerJ5)->Unit(benchmark::kMillisecond);

void BM_ColouringFlowerJ5(benchmark::State& state) {
  const Graph g = generate_graph(family::FlowerJ5{});
  for (auto _ : state) benchmark::DoNotOptimize(is_three_edge_colorable(g));
}
BENCHMARK(BM_ColouringFlowerJ5)->Unit(benchmark::kMillisecond);

void BM_HamiltonianDesargues(benchmark::State& state) {
  const Graph g = generate_graph(family::kDesargues);
  for (auto _ : state) benchmark::DoNotOptimize(find_hamiltonian_cycle(g));
}
BENCHMARK(BM_HamiltonianDesargues)->Unit(benchmark::kMicrosecond);

void BM_NonHamiltonianTietze(benchmark::State& state) {
  const Graph g = generate_graph(family::Tietze{});
  for (auto _ : state) benchmark::DoNotOptimize(find_hamiltonian_cycle(g));
}
BENCHMARK(BM_NonHamiltonianTietze)->Unit(benchmark::kMicrosecond);

void BM_VerifyGrid(benchmark::State& state) {
  const std::vector<FamilySpec> grid = ci_grid();
  for (auto _ : state) {
    std::size_t passed = 0;
    for (const FamilySpec& spec : grid) passed += verify_family(spec).passed_all;
    benchmark::DoNotOptimize(passed);
  }
  state.counters["specs"] = static_cast<double>(grid.size());
}
BENCHMARK(BM_VerifyGrid)->Unit(benchmark::kSecond)->Iterations(1);

// Integer elements take the fast path; a 1/2 coefficient forces rationals.
void BM_Multiply(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const EvolutionAlgebra a = family_law(family::Wheel{n});
  AlgebraElement x(n), y(n);
  for (std::size_t i = 1; i <= n; ++i) {
    x[i] = static_cast<long>(i % 7) - 3;
    y[i] = static_cast<long>(i % 5) + 1;
  }
  if (state.range(1)) x[1] = Rational(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, x, y));
}
BENCHMARK(BM_Multiply)->ArgsProduct({{16, 128, 1024}, {0, 1}});

void BM_TheoremChain(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(theorem_chain(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_TheoremChain)->Arg(3)->Arg(10)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
