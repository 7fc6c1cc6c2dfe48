#include <benchmark/benchmark.h>

#include "kdef/cohomology.hpp"
#include "kdef/deformation.hpp"
#include "kdef/transvectants.hpp"

namespace {

using namespace kdef;

Scalar lam() { return SymbolSpace::generic(0).lowest; }

void BM_ScalarArithmetic(benchmark::State& state) {
  Scalar l = lam();
  for (auto _ : state) {
    Scalar x = (l * (l + 1) * (2 * l + 3)) / (l + 5) - (l * l) / (l + 5);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_ScalarArithmetic);

void BM_ContactJacobi(benchmark::State& state) {
  auto gens = monomial_generators(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    bool ok = true;
    for (const auto& f : gens)
      for (const auto& g : gens) ok = ok && jacobi_check(f, g, gens.back());
    benchmark::DoNotOptimize(ok);
  }
  state.SetItemsProcessed(state.iterations() * gens.size() * gens.size());
}
BENCHMARK(BM_ContactJacobi)->Arg(3)->Arg(6);

void BM_SupertransvectantInvariance(benchmark::State& state) {
  Rational k = rat(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(check_invariance(supertransvectant(k, Scalar(-1), lam())));
}
BENCHMARK(BM_SupertransvectantInvariance)->Arg(5)->Arg(9)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_SolveCoboundary(benchmark::State& state) {
  Cochain2 omega = two_cocycle("B[l,l+5]", lam());
  for (auto _ : state) benchmark::DoNotOptimize(solve_coboundary(omega, 12).solvable);
}
BENCHMARK(BM_SolveCoboundary)->Unit(benchmark::kMillisecond);

void BM_MaurerCartan(benchmark::State& state) {
  const int n2 = static_cast<int>(state.range(0));
  for (auto _ : state) {
    MaurerCartan e(SymbolSpace::generic(n2));
    e.solve_to(3);
    benchmark::DoNotOptimize(e.conditions().size());
  }
}
BENCHMARK(BM_MaurerCartan)->Arg(10)->Arg(11)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
