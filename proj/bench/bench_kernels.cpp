#include <benchmark/benchmark.h>

#include "hspecht/quotient.hpp"
#include "hspecht/specht.hpp"
#include "hspecht/symfunc.hpp"

using namespace hspecht;

namespace {

FamilyParams rn(int n) {
  FamilyParams p;
  p.n = n;
  return normalize_params(Family::Rn, p);
}

void BM_BasisFamily(benchmark::State& state, Exec exec) {
  const auto p = rn(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_basis_family(Family::Rn, p, exec));
}

void BM_Frobenius(benchmark::State& state, Exec exec) {
  FamilyParams p;
  p.mu = Partition{2, 2, 1, 1};
  p = normalize_params(Family::Rmu, p);
  GradedQuotient q(build_ideal(Family::Rmu, p));
  for (auto _ : state) benchmark::DoNotOptimize(graded_frobenius(q, exec));
}

void BM_Symmetrizer(benchmark::State& state, bool reference) {
  const Tableau t = Tableau::parse("1 3 4/2 6/5");
  const Tableau s = Tableau::parse("1 2 4/3 5/6");
  const Poly p = Poly::monomial(6, cocharge_monomial(s, t));
  for (auto _ : state)
    benchmark::DoNotOptimize(reference ? apply_symmetrizer_reference(t, p) : apply_symmetrizer(t, p));
}

}  // namespace

BENCHMARK_CAPTURE(BM_BasisFamily, serial, Exec::Serial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BasisFamily, parallel, Exec::Parallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Frobenius, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Frobenius, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Symmetrizer, coset, false)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Symmetrizer, reference, true)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
