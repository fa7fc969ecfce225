#include "hyperlab/collineations.hpp"
#include "hyperlab/factor_hyperfield.hpp"
#include "hyperlab/fraction_hyperfield.hpp"
#include "hyperlab/hypergroup_checks.hpp"
#include "hyperlab/isomorphism.hpp"
#include "hyperlab/kvector_space.hpp"
#include "hyperlab/projective_checks.hpp"

#include <benchmark/benchmark.h>

using namespace hyperlab;

namespace {

// Args: q, n.
void BM_IncidenceHypergroupCheck(benchmark::State& state) {
  const ProjectiveSpace space(GaloisField::of_order(static_cast<std::uint32_t>(state.range(0))),
                              static_cast<unsigned>(state.range(1)));
  const auto h = incidence_hypergroup(space);
  for (auto _ : state) benchmark::DoNotOptimize(check_canonical_hypergroup(h));
  state.counters["carrier"] = static_cast<double>(h.size());
}
BENCHMARK(BM_IncidenceHypergroupCheck)->Args({3, 1})->Args({5, 1})->Args({3, 2})->Args({4, 2})->Args({3, 3});

void BM_FactorHyperring(benchmark::State& state) {
  const auto f = GaloisField::of_order(static_cast<std::uint32_t>(state.range(0)));
  const auto t = Subgroup::of_order(f, static_cast<std::uint64_t>(state.range(1)));
  for (auto _ : state) {
    const auto fh = build_factor_hyperfield(f, t);
    benchmark::DoNotOptimize(check_hyperring(fh.table));
  }
}
BENCHMARK(BM_FactorHyperring)->Args({27, 2})->Args({27, 13})->Args({81, 2})->Args({125, 4});

void BM_FindIsomorphism(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const auto n = static_cast<unsigned>(state.range(1));
  const auto h = incidence_hypergroup(ProjectiveSpace(GaloisField::of_order(q), n));
  std::uint32_t big = 1;
  for (unsigned i = 0; i <= n; ++i) big *= q;
  const auto ext = GaloisField::of_order(big);
  const auto target = build_factor_hyperfield(ext, Subgroup::subfield_units(ext, q)).table.additive();
  for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(h, target));
}
BENCHMARK(BM_FindIsomorphism)->Args({3, 2})->Args({4, 2})->Args({3, 3});

void BM_Desargues(benchmark::State& state) {
  const ProjectiveSpace space(GaloisField::of_order(static_cast<std::uint32_t>(state.range(0))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(check_desargues(space));
}
BENCHMARK(BM_Desargues)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Collineations(benchmark::State& state) {
  const ProjectiveSpace space(GaloisField::of_order(static_cast<std::uint32_t>(state.range(0))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_collineations(space));
}
BENCHMARK(BM_Collineations)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_KDimension(benchmark::State& state) {
  const KVectorSpace v(incidence_hypergroup(ProjectiveSpace(GaloisField::of_order(3), 2)));
  for (auto _ : state) benchmark::DoNotOptimize(dimension(v, 0, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_KDimension)->Arg(1)->Arg(20);

void BM_FractionComparison(benchmark::State& state) {
  const PolynomialCosetRing ring(GaloisField::prime(3));
  const auto fr = build_fraction_hyperfield(ring, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compare_with_rational_route(fr));
}
BENCHMARK(BM_FractionComparison)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
