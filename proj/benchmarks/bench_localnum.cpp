#include "hyperlab/krasner.hpp"
#include "hyperlab/local_number.hpp"

#include <benchmark/benchmark.h>

using namespace hyperlab;

namespace {

Poly<Rationals> qpoly(std::vector<Rational> c) { return Poly<Rationals>(Rationals{}, std::move(c)); }

void BM_HenselLift(benchmark::State& state) {
  const auto Q5 = LocalFieldSpec::padic(5);
  const auto f = qpoly({-6, 0, 1});
  const auto x0 = LocalNumber::from_rational(Q5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hensel_lift(f, x0, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_HenselLift)->Arg(3)->Arg(32)->Arg(256);

void BM_KrasnerQuadratic(benchmark::State& state) {
  const auto Q5 = LocalFieldSpec::padic(5);
  const auto f = qpoly({-5, 0, 1}), g = qpoly({-30, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(krasner_separates(f, g, Q5));
}
BENCHMARK(BM_KrasnerQuadratic);

void BM_KrasnerCubic(benchmark::State& state) {
  const auto Q7 = LocalFieldSpec::padic(7);
  const auto f = qpoly({-7, 0, 0, 1}), g = qpoly({Rational(-7 - 343 * 2), 0, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(krasner_separates(f, g, Q7));
}
BENCHMARK(BM_KrasnerCubic);

void BM_QuadraticExtensionCount(benchmark::State& state) {
  const auto spec = LocalFieldSpec::padic(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_quadratic_extensions(spec));
}
BENCHMARK(BM_QuadraticExtensionCount)->Arg(2)->Arg(5)->Arg(101);

}  // namespace
