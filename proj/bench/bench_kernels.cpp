// Copyright 2026 The frobayes Authors
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


// OpenMP kernels against their serial reference versions.

#include <benchmark/benchmark.h>

#include <random>

#include "frobayes/linalg.hpp"

namespace {

using frobayes::linalg::Mat;

Mat random_mat(std::size_t r, std::size_t c, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n;
  Mat m(r, c);
  for (auto& x : m.data()) x = {n(rng), n(rng)};
  return m;
}

void BM_Matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Mat a = random_mat(n, n, 1), b = random_mat(n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(frobayes::linalg::matmul(a, b));
  state.SetComplexityN(state.range(0));
}

void BM_MatmulSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Mat a = random_mat(n, n, 1), b = random_mat(n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(frobayes::linalg::serial::matmul(a, b));
  state.SetComplexityN(state.range(0));
}

void BM_Tensor(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Mat a = random_mat(n, n, 3), b = random_mat(n, n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(frobayes::linalg::tensor(a, b));
}

void BM_TensorSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Mat a = random_mat(n, n, 3), b = random_mat(n, n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(frobayes::linalg::serial::tensor(a, b));
}

void BM_PartialTrace(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const std::vector<std::size_t> dims{d, d, d};
  const Mat rho = random_mat(d * d * d, d * d * d, 5);
  for (auto _ : state) benchmark::DoNotOptimize(frobayes::linalg::partial_trace(rho, dims, 1));
}

void BM_PartialTraceSerial(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const std::vector<std::size_t> dims{d, d, d};
  const Mat rho = random_mat(d * d * d, d * d * d, 5);
  for (auto _ : state) benchmark::DoNotOptimize(frobayes::linalg::serial::partial_trace(rho, dims, 1));
}

}  // namespace

BENCHMARK(BM_Matmul)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);
BENCHMARK(BM_MatmulSerial)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);
BENCHMARK(BM_Tensor)->RangeMultiplier(2)->Range(4, 32);
BENCHMARK(BM_TensorSerial)->RangeMultiplier(2)->Range(4, 32);
BENCHMARK(BM_PartialTrace)->DenseRange(2, 6, 2);
BENCHMARK(BM_PartialTraceSerial)->DenseRange(2, 6, 2);

BENCHMARK_MAIN();
