#include <benchmark/benchmark.h>

#include <random>

#include "wcolab/chaos.hpp"
#include "wcolab/operator.hpp"
#include "wcolab/spaces.hpp"
#include "wcolab/weight_iterates.hpp"

using namespace wcolab;

namespace {

AnalyticPoly random_poly(std::size_t degree, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<Complex> c(degree + 1);
  for (auto& x : c) x = {u(rng), u(rng)};
  return AnalyticPoly(std::move(c));
}

SelfMapSymbol phi_a(double a) {
  SelfMapSymbol phi = SelfMapSymbol::phi_a(a);
  validate_self_map(phi);
  return phi;
}

void BM_compose_affine(benchmark::State& state) {
  const AnalyticPoly f = random_poly(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(compose_affine(f, 0.25, 0.75));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_compose_affine)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oNSquared);

void BM_weight_cache(benchmark::State& state) {
  const auto horizon = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    WeightIterateCache cache(WeightSymbol::linear(0.9), phi_a(0.25), horizon);
    benchmark::DoNotOptimize(cache.weight_iterate(horizon));
  }
}
BENCHMARK(BM_weight_cache)->Arg(100)->Arg(500);

void BM_eigen_orbit_norms(benchmark::State& state) {
  const WeightedCompOp op(WeightSymbol::linear(0.9), phi_a(0.25));
  const WeightIterateCache cache(op.w, op.phi, 100);
  const EigenCandidate g{-0.4, static_cast<std::size_t>(state.range(0)), 0};
  for (auto _ : state) benchmark::DoNotOptimize(orbit_norm_sequence(op, g, SpaceSpec::hardy(2), cache));
}
BENCHMARK(BM_eigen_orbit_norms)->Arg(256)->Arg(1024);

void BM_quad_norm_hp(benchmark::State& state) {
  const AnalyticPoly f = random_poly(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(norm(f, SpaceSpec::hardy(1.0)));
}
BENCHMARK(BM_quad_norm_hp)->Arg(64)->Arg(1024);

void BM_quad_norm_bergman(benchmark::State& state) {
  const AnalyticPoly f = random_poly(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(norm(f, SpaceSpec::bergman(3.0, -0.5)));
}
BENCHMARK(BM_quad_norm_bergman)->Arg(64)->Arg(256);

void BM_classify_certificate(benchmark::State& state) {
  const WeightedCompOp op(WeightSymbol::linear(0.9), phi_a(0.25));
  const WeightIterateCache cache(op.w, op.phi, 500);
  const NormSequence w = weight_norm_sequence(cache, SpaceSpec::hardy(2));
  const std::vector<NormSequence> orbits{orbit_norm_sequence(op, EigenCandidate{-0.4, 256, 0}, SpaceSpec::hardy(2), cache)};
  for (auto _ : state) benchmark::DoNotOptimize(certify_li_yorke(w, orbits, 1e-10, 1e3));
}
BENCHMARK(BM_classify_certificate);

}  // namespace

BENCHMARK_MAIN();
