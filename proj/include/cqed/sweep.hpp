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

#pragma once

// Fidelity sweeps. Points are independent runs; the parallel path spreads
// them over OpenMP threads and the serial path is kept as the reference.
// Both return rows in input order and agree bit for bit.

#include <span>
#include <vector>

#include "cqed/experiment.hpp"

namespace cqed {

enum class Execution { kSerial, kParallel };

struct SweepPoint {
  double param;
  double fidelity;
};

/// One run_physical per epsilon, all other fields from `config`.
std::vector<SweepPoint> sweep_error(const ExperimentConfig& config, std::span<const double> epsilons,
                                    Execution exec = Execution::kParallel);

/// Fidelity against delta/Omega at epsilon = 0 under the exact model.
std::vector<SweepPoint> sweep_detuning(const ExperimentConfig& config,
                                       std::span<const double> ratios,
                                       Execution exec = Execution::kParallel);

/// Runs every config; results[i] belongs to configs[i].
std::vector<RunResult> run_batch(std::span<const ExperimentConfig> configs,
                                 Execution exec = Execution::kParallel);

}  // namespace cqed
