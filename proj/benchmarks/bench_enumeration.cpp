#include <benchmark/benchmark.h>

#include "parasym/coset_enumeration.hpp"
#include "parasym/families.hpp"
#include "parasym/homology.hpp"
#include "parasym/morphisms.hpp"

using namespace parasym;

namespace {

const char* const kGroups[] = {"c2", "klein", "s3", "d4", "a4"};

void BM_TranspositionEnumeration(benchmark::State& state) {
  const auto g = share(make_builtin(kGroups[state.range(0)]));
  const auto p = transposition_presentation(3, g);
  std::uint32_t order = 0;
  for (auto _ : state) {
    const auto t = todd_coxeter(p);
    order = t.coset_count();
    benchmark::DoNotOptimize(t.rows().data());
  }
  state.SetLabel(std::string(kGroups[state.range(0)]) + " |S_3(G)|=" + std::to_string(order));
}
BENCHMARK(BM_TranspositionEnumeration)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_CoxeterEnumeration(benchmark::State& state) {
  const auto p = coxeter_presentation(static_cast<std::uint32_t>(state.range(0)), share(make_builtin("klein")));
  for (auto _ : state) benchmark::DoNotOptimize(todd_coxeter(p).coset_count());
}
BENCHMARK(BM_CoxeterEnumeration)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_KernelOfMu(benchmark::State& state) {
  const auto g = share(make_builtin(kGroups[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_of_mu(3, g));
}
BENCHMARK(BM_KernelOfMu)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_ExteriorSquare(benchmark::State& state) {
  const auto g = share(make_builtin(kGroups[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(exterior_square_group(g));
}
BENCHMARK(BM_ExteriorSquare)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_AbelianizationSNF(benchmark::State& state) {
  const auto p = transposition_presentation(3, share(make_builtin("s3")));
  for (auto _ : state) benchmark::DoNotOptimize(abelian_invariants_of_presentation(p));
}
BENCHMARK(BM_AbelianizationSNF)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
