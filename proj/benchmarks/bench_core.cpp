#include <benchmark/benchmark.h>

#include <twistor/cp3.hpp>
#include <twistor/extremum.hpp>
#include <twistor/nearly_kaehler.hpp>
#include <twistor/nijenhuis.hpp>
#include <twistor/z_geometry.hpp>

using namespace twistor;

static void BM_Validate(benchmark::State& state) {
  const Mat6 j = random_acs(1).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(ACS::validate(j));
}
BENCHMARK(BM_Validate);

static void BM_NijenhuisNormSquared(benchmark::State& state) {
  const ACS j = random_acs(2);
  for (auto _ : state) benchmark::DoNotOptimize(nijenhuis_norm_squared(j));
}
BENCHMARK(BM_NijenhuisNormSquared);

static void BM_NkDefect(benchmark::State& state) {
  const ACS j = random_acs(3);
  for (auto _ : state) benchmark::DoNotOptimize(nk_defect(j));
}
BENCHMARK(BM_NkDefect);

static void BM_Cp3ToAcs(benchmark::State& state) {
  const CP3Point p(Complex(1, 0.5), Complex(-0.3, 0.2), Complex(0.7, -1), Complex(0.1, 0.4));
  for (auto _ : state) benchmark::DoNotOptimize(cp3_to_acs(p));
}
BENCHMARK(BM_Cp3ToAcs);

static void BM_AcsToCp3(benchmark::State& state) {
  const ACS j = random_acs(4);
  for (auto _ : state) benchmark::DoNotOptimize(acs_to_cp3(j));
}
BENCHMARK(BM_AcsToCp3);

static void BM_SeamLimit(benchmark::State& state) {
  const PolarPairParams p{0.3, 0.4, std::sqrt(0.75), -0.2, 0.5, std::sqrt(0.71)};
  for (auto _ : state) benchmark::DoNotOptimize(lemma3_seam_limit(p, SeamSide::Plus, 0.7));
}
BENCHMARK(BM_SeamLimit);

static void BM_MaximizeRestarts(benchmark::State& state) {
  SearchOptions opts;
  opts.parallel = false;
  for (auto _ : state) benchmark::DoNotOptimize(maximize(1, static_cast<int>(state.range(0)), opts));
}
BENCHMARK(BM_MaximizeRestarts)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
