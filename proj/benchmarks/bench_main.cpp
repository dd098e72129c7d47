#include <benchmark/benchmark.h>

#include <random>

#include "phasecart/cartographer.hpp"
#include "phasecart/phase_engine.hpp"
#include "phasecart/wigner.hpp"

using namespace phasecart;

namespace {

Rotation random_rotation(std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  Rotation r{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
  return r.normalized();
}

void BM_WignerD(benchmark::State& state) {
  const int two_j = static_cast<int>(state.range(0));
  std::mt19937 rng(1);
  const Rotation r = random_rotation(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wigner_d_matrix(two_j, r));
  }
}
BENCHMARK(BM_WignerD)->Arg(1)->Arg(4)->Arg(10)->Arg(20);

void BM_Amplitude(benchmark::State& state) {
  ApparatusConfig config;
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> coord(-200.0, 200.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pancharatnam_amplitude({coord(rng), coord(rng)}, config));
  }
}
BENCHMARK(BM_Amplitude);

void BM_TracePath(benchmark::State& state) {
  ApparatusConfig config;
  ParameterPath p;
  p.vertices = {point_I(), {50.0, -30.0}, point_F()};
  p.steps_per_segment = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace_path(p, config));
  }
}
BENCHMARK(BM_TracePath)->Arg(100)->Arg(400);

void BM_FindSingularities(benchmark::State& state) {
  ApparatusConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_singularities({-50, 50, -50, 50}, 32, config));
  }
}
BENCHMARK(BM_FindSingularities);

}  // namespace

BENCHMARK_MAIN();
