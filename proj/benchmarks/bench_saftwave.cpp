#include <benchmark/benchmark.h>

#include <cmath>

#include "saftwave/saftwave.hpp"

using namespace saftwave;

static void BM_Forward(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = SampledFunction::sample(UniformGrid::spanning(-10, 10, n), [](double x) {
    return cplx(std::exp(-0.5 * x * x));
  });
  const UniformGrid z = UniformGrid::spanning(-8, 8, 257);
  for (auto _ : state) {
    benchmark::DoNotOptimize(forward(presets::figure1(), f, z));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * z.size()));
}
BENCHMARK(BM_Forward)->Arg(641)->Arg(1281)->Arg(2561)->Unit(benchmark::kMillisecond);

static void BM_Reconstruct(benchmark::State& state) {
  const SaftParams s = presets::figure2();
  const int window = static_cast<int>(state.range(0));
  const auto samples = sampling::SampleSet::from_function(
      [&](double x) { return chirp(s, x) * sampling::sinc(x - 0.5); }, 1.0, window);
  const sampling::BandlimitSpec spec{s.B * kPi, 1.0};
  const UniformGrid x = UniformGrid::spanning(-4, 4, 801);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampling::reconstruct(s, samples, spec, x));
  }
}
BENCHMARK(BM_Reconstruct)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_ShannonPsi(benchmark::State& state) {
  const auto fam = wavelets::make_family(wavelets::WaveletKind::shannon, presets::figure1(),
                                         static_cast<int>(state.range(0)));
  double x = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fam.psi(x));
    x = x > 3.0 ? -3.0 : x + 0.005;
  }
}
BENCHMARK(BM_ShannonPsi)->Arg(128)->Arg(512)->Arg(2048);

static void BM_ShannonSymbol(benchmark::State& state) {
  const auto [h, d] = wavelets::shannon_filters(presets::figure1(), static_cast<int>(state.range(0)));
  const mra::SymbolFn s0(presets::figure1(), h, mra::FilterKind::lowpass);
  double z = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s0(z));
    z += 0.01;
  }
}
BENCHMARK(BM_ShannonSymbol)->Arg(512)->Arg(4096);

static void BM_CollocationSolve(benchmark::State& state) {
  const approx::CollocationProblem p{static_cast<int>(state.range(0)), presets::figure1(),
                                     approx::BasisKind::special_affine,
                                     [](double x) { return x * x; }};
  for (auto _ : state) {
    benchmark::DoNotOptimize(approx::solve(p));
  }
}
BENCHMARK(BM_CollocationSolve)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

static void BM_ErrorTable(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        approx::error_table(presets::figure1(), [](double x) { return x * x; }, 6));
  }
}
BENCHMARK(BM_ErrorTable)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
