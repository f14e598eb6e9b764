// Copyright 2026 The homsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <limits>

#include "homsim/detectors.hpp"
#include "homsim/oracle.hpp"

namespace {

using namespace homsim;

BiphotonInput RadialPi() {
  return BiphotonInput(make_vv_mode(NamedMode::kRadial), make_vv_mode(NamedMode::kPi));
}

void BM_CoincidenceAtDelay(benchmark::State& state) {
  const BiphotonInput in = RadialPi();
  const ProjectionPair proj = projections(Setting::kAA);
  double phi = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(coincidence_at_delay(in, proj, phi, 1.0 - phi, 3e-14));
    phi += 1e-3;
  }
}
BENCHMARK(BM_CoincidenceAtDelay);

void BM_BucketRate(benchmark::State& state) {
  const BiphotonInput in = RadialPi();
  const QuadratureOptions quad{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(bucket_bucket_rate(in, projections(Setting::kAH), 0.0, quad));
}
BENCHMARK(BM_BucketRate)->Arg(64)->Arg(512)->Arg(2048);

void BM_CameraMap(benchmark::State& state) {
  const BiphotonInput in = RadialPi();
  const int n = static_cast<int>(state.range(0));
  const PixelGrid grid = PixelGrid::centered(n, n, 6.4 / n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(camera_bucket_map(in, projections(Setting::kAH), 0.0, grid));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_CameraMap)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_ApplyBeamSplitter(benchmark::State& state) {
  const oracle::DiscreteModeBasis basis(static_cast<int>(state.range(0)));
  const BiphotonInput in = RadialPi();
  const auto x = oracle::discretize_mode(in.mode_a(), oracle::Port::kA, basis);
  const auto y = oracle::discretize_mode(in.mode_b(), oracle::Port::kB, basis);
  const auto product = oracle::TwoPhotonAmplitudes::product(basis, x, y);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::apply_bs(product));
}
BENCHMARK(BM_ApplyBeamSplitter)->Arg(8)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_PoissonMap(benchmark::State& state) {
  const ScalarMap m = camera_bucket_map(RadialPi(), projections(Setting::kAH), 0.0, PixelGrid::centered(64, 64, 0.1));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_poisson(m, 1e6, seed++));
}
BENCHMARK(BM_PoissonMap)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
