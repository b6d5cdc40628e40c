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

#include "cqed/sweep.hpp"

#include <exception>
#include <stdexcept>

namespace cqed {

namespace {

std::vector<SweepPoint> to_points(std::span<const double> params,
                                  const std::vector<RunResult>& results) {
  std::vector<SweepPoint> out;
  out.reserve(params.size());
  for (std::size_t k = 0; k < params.size(); ++k) out.push_back({params[k], results[k].fidelity});
  return out;
}

}  // namespace

std::vector<RunResult> run_batch(std::span<const ExperimentConfig> configs, Execution exec) {
  for (const auto& c : configs) c.validate();
  std::vector<RunResult> results(configs.size());
  const auto n = static_cast<long>(configs.size());

  if (exec == Execution::kSerial) {
    for (long k = 0; k < n; ++k) results[static_cast<std::size_t>(k)] = run_physical(configs[static_cast<std::size_t>(k)]);
    return results;
  }

  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < n; ++k) {
    try {
      results[static_cast<std::size_t>(k)] = run_physical(configs[static_cast<std::size_t>(k)]);
    } catch (...) {
#pragma omp critical(cqed_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

std::vector<SweepPoint> sweep_error(const ExperimentConfig& config, std::span<const double> epsilons,
                                    Execution exec) {
  if (epsilons.empty()) throw std::invalid_argument("sweep_error: no points given");
  std::vector<ExperimentConfig> configs(epsilons.size(), config);
  for (std::size_t k = 0; k < epsilons.size(); ++k) configs[k].epsilon = epsilons[k];
  return to_points(epsilons, run_batch(configs, exec));
}

std::vector<SweepPoint> sweep_detuning(const ExperimentConfig& config,
                                       std::span<const double> ratios, Execution exec) {
  if (ratios.empty()) throw std::invalid_argument("sweep_detuning: no points given");
  std::vector<ExperimentConfig> configs(ratios.size(), config);
  for (std::size_t k = 0; k < ratios.size(); ++k) {
    if (!(ratios[k] >= 1.0)) throw std::invalid_argument("sweep_detuning: ratios must be >= 1");
    configs[k].delta_over_omega = ratios[k];
    configs[k].epsilon = 0.0;
    configs[k].collision_model = CollisionModel::kExact;
  }
  return to_points(ratios, run_batch(configs, exec));
}

}  // namespace cqed
