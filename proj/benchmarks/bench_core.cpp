// Copyright 2026 The gaussian-typicality Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gtyp/haar.hpp"
#include "gtyp/phase_space.hpp"
#include "gtyp/random_state.hpp"
#include "gtyp/typicality.hpp"
#include "gtyp/weingarten.hpp"

#include <benchmark/benchmark.h>

namespace {

gtyp::RandomStateConfig config(int n, int m) {
  gtyp::RandomStateConfig c;
  c.n_full = n;
  c.m_sys = m;
  c.profile = gtyp::ZProfile::uniform(1.5);
  c.master_seed = 1;
  return c;
}

void BM_SymplecticEigenvalues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  gtyp::SampleStream rng(1, 0);
  const auto g = gtyp::sample_physical_covariance(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(gtyp::symplectic_eigenvalues(g).nus);
}
BENCHMARK(BM_SymplecticEigenvalues)->Arg(1)->Arg(2)->Arg(8)->Arg(32);

void BM_WilliamsonFactor(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  gtyp::SampleStream rng(1, 0);
  const auto g = gtyp::sample_physical_covariance(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(gtyp::symplectic_eigenvalues(g, true).symplectic_factor);
}
BENCHMARK(BM_WilliamsonFactor)->Arg(2)->Arg(8)->Arg(32);

void BM_HaarUnitary(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::uint64_t i = 0;
  for (auto _ : state) {
    gtyp::SampleStream rng(1, i++);
    benchmark::DoNotOptimize(gtyp::haar_unitary(d, rng));
  }
}
BENCHMARK(BM_HaarUnitary)->Arg(4)->Arg(32)->Arg(128)->Arg(512);

void BM_HaarRows(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::uint64_t i = 0;
  for (auto _ : state) {
    gtyp::SampleStream rng(1, i++);
    benchmark::DoNotOptimize(gtyp::haar_rows(d, 2, rng));
  }
}
BENCHMARK(BM_HaarRows)->Arg(32)->Arg(128)->Arg(512);

void BM_SampleRandomState(benchmark::State& state) {
  const auto c = config(static_cast<int>(state.range(0)), 1);
  const auto z = gtyp::squeezing_for_sample(c, 0);
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gtyp::sample_random_state(c, z, i++));
}
BENCHMARK(BM_SampleRandomState)->Arg(16)->Arg(64)->Arg(256);

void BM_EvaluateRecord(benchmark::State& state) {
  const auto c = config(64, static_cast<int>(state.range(0)));
  const auto z = gtyp::squeezing_for_sample(c, 0);
  const auto g = gtyp::sample_random_state(c, z, 0);
  for (auto _ : state) benchmark::DoNotOptimize(gtyp::evaluate_record(g, z, c, 0));
}
BENCHMARK(BM_EvaluateRecord)->Arg(1)->Arg(2)->Arg(8);

void BM_AnalyticMoments(benchmark::State& state) {
  const auto c = config(static_cast<int>(state.range(0)), 2);
  const auto z = gtyp::squeezing_for_sample(c, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gtyp::analytic_second_moment(z, 2));
    benchmark::DoNotOptimize(gtyp::analytic_omega_second_moment(z, 2));
  }
}
BENCHMARK(BM_AnalyticMoments)->Arg(16)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
