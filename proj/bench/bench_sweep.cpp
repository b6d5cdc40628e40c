// Copyright 2026 The cqed-grover Authors
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

// Serial reference vs OpenMP sweep over pulse error and detuning.

#include <vector>

#include <benchmark/benchmark.h>

#include "cqed/sweep.hpp"

namespace {

std::vector<double> grid(int n, double lo, double hi) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) g[static_cast<std::size_t>(k)] = lo + (hi - lo) * k / std::max(1, n - 1);
  return g;
}

void BM_ErrorSweep(benchmark::State& state, cqed::Execution exec) {
  const auto eps = grid(static_cast<int>(state.range(0)), 0.0, 0.05);
  const cqed::ExperimentConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(cqed::sweep_error(config, eps, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DetuningSweep(benchmark::State& state, cqed::Execution exec) {
  const auto ratios = grid(static_cast<int>(state.range(0)), 4.0, 20.0);
  const cqed::ExperimentConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(cqed::sweep_detuning(config, ratios, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK_CAPTURE(BM_ErrorSweep, serial, cqed::Execution::kSerial)->Arg(8)->Arg(64);
BENCHMARK_CAPTURE(BM_ErrorSweep, parallel, cqed::Execution::kParallel)->Arg(8)->Arg(64);
BENCHMARK_CAPTURE(BM_DetuningSweep, serial, cqed::Execution::kSerial)->Arg(8)->Arg(64);
BENCHMARK_CAPTURE(BM_DetuningSweep, parallel, cqed::Execution::kParallel)->Arg(8)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
