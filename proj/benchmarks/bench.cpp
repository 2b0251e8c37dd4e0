#include <benchmark/benchmark.h>

#include "rldual/chains.hpp"
#include "rldual/dual_quadruple.hpp"
#include "rldual/filter_pairs.hpp"
#include "rldual/fixtures.hpp"
#include "rldual/quadruple.hpp"
#include "rldual/space.hpp"

using namespace rldual;

static void BM_Validate(benchmark::State& state) {
  Algebra a = product(nm_chain(4), godel_chain(3));
  for (auto _ : state) benchmark::DoNotOptimize(validate(a).passed());
}
BENCHMARK(BM_Validate);

static void BM_Classify(benchmark::State& state) {
  Algebra a = product(nm_chain(4), godel_chain(3));
  for (auto _ : state) benchmark::DoNotOptimize(classify(a).is_sbp());
}
BENCHMARK(BM_Classify);

static void BM_EnumerateChains(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_mtl_chains(n, n));
  state.SetLabel("n=" + std::to_string(n));
}
BENCHMARK(BM_EnumerateChains)->Arg(4)->Arg(5)->Arg(6)->Arg(7);

static void BM_Spectrum(benchmark::State& state) {
  Algebra a = product(nm_chain(4), godel_chain(3));
  for (auto _ : state) {
    Spectrum s(a);
    benchmark::DoNotOptimize(s.count());
  }
}
BENCHMARK(BM_Spectrum);

static void BM_UpsetAlgebra(benchmark::State& state) {
  Algebra a = product(nm_chain(4), godel_chain(3));
  ResiduatedSpace x = spectrum_space(a);
  for (auto _ : state) benchmark::DoNotOptimize(upset_algebra(x, SpaceMode::Mtl).size);
}
BENCHMARK(BM_UpsetAlgebra);

static void BM_Compose(benchmark::State& state) {
  AlgebraicQuadruple q = extract_quadruple(product(nm_chain(4), godel_chain(3)));
  for (auto _ : state) benchmark::DoNotOptimize(compose(q).algebra.size);
}
BENCHMARK(BM_Compose);

static void BM_Bowtie(benchmark::State& state) {
  Algebra a = product(nm_chain(4), godel_chain(3));
  FilterPairContext ctx(a);
  for (auto _ : state) {
    BowtieSpace bt = build_bowtie(ctx);
    benchmark::DoNotOptimize(alpha(ctx, bt).size());
  }
}
BENCHMARK(BM_Bowtie);

static void BM_CommuteSquare(benchmark::State& state) {
  Algebra a = product(nm_chain(4), godel_chain(3));
  for (auto _ : state) benchmark::DoNotOptimize(commute_square(a).all());
}
BENCHMARK(BM_CommuteSquare);

BENCHMARK_MAIN();
