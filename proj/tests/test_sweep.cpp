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

#include <vector>

#include <gtest/gtest.h>

#include "cqed/sweep.hpp"

namespace cqed {
namespace {

const std::vector<double> kEpsilons{0.0, 0.01, 0.02, 0.03, 0.04, 0.05};
const std::vector<double> kRatios{4.0, 8.0, 12.0, 16.0, 20.0};

TEST(SweepError, SinglePointMatchesRun) {
  ExperimentConfig c;
  const std::vector<double> zero{0.0};
  const auto rows = sweep_error(c, zero);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].param, 0.0);
  EXPECT_EQ(rows[0].fidelity, run_physical(c).fidelity);
}

TEST(SweepError, ParallelMatchesSerialBitForBit) {
  ExperimentConfig c;
  const auto par = sweep_error(c, kEpsilons, Execution::kParallel);
  const auto ser = sweep_error(c, kEpsilons, Execution::kSerial);
  ASSERT_EQ(par.size(), ser.size());
  for (std::size_t k = 0; k < par.size(); ++k) {
    EXPECT_EQ(par[k].param, kEpsilons[k]);
    EXPECT_EQ(par[k].fidelity, ser[k].fidelity);
  }
}

TEST(SweepError, MonotoneOverDefaultRange) {
  for (auto model : {ErrorModel::kRabiOnly, ErrorModel::kAllAngles}) {
    ExperimentConfig c;
    c.error_model = model;
    const auto rows = sweep_error(c, kEpsilons);
    for (std::size_t k = 1; k < rows.size(); ++k) EXPECT_LE(rows[k].fidelity, rows[k - 1].fidelity);
    EXPECT_LT(rows[3].fidelity, rows[0].fidelity);
    EXPECT_GT(rows[3].fidelity, rows[5].fidelity);
  }
}

TEST(SweepError, InputOrderPreserved) {
  ExperimentConfig c;
  const std::vector<double> shuffled{0.05, 0.0, 0.03};
  const auto rows = sweep_error(c, shuffled);
  EXPECT_EQ(rows[0].param, 0.05);
  EXPECT_EQ(rows[1].param, 0.0);
  EXPECT_GT(rows[1].fidelity, rows[0].fidelity);
}

TEST(SweepError, Errors) {
  ExperimentConfig c;
  EXPECT_THROW(sweep_error(c, std::vector<double>{}), std::invalid_argument);
  EXPECT_THROW(sweep_error(c, std::vector<double>{0.0, 0.9}), std::invalid_argument);
}

TEST(SweepDetuning, ConvergesWithRatio) {
  ExperimentConfig c;
  c.epsilon = 0.05;  // ignored by the detuning sweep
  c.collision_model = CollisionModel::kEffective;  // ignored too
  const auto rows = sweep_detuning(c, kRatios);
  for (std::size_t k = 1; k < rows.size(); ++k) EXPECT_GT(rows[k].fidelity, rows[k - 1].fidelity);
  EXPECT_GT(rows.back().fidelity, 0.99);

  ExperimentConfig plain;
  EXPECT_EQ(rows.front().fidelity, run_physical(plain).fidelity);

  const auto ser = sweep_detuning(c, kRatios, Execution::kSerial);
  for (std::size_t k = 0; k < rows.size(); ++k) EXPECT_EQ(rows[k].fidelity, ser[k].fidelity);
}

TEST(SweepDetuning, Errors) {
  ExperimentConfig c;
  EXPECT_THROW(sweep_detuning(c, std::vector<double>{}), std::invalid_argument);
  EXPECT_THROW(sweep_detuning(c, std::vector<double>{0.5}), std::invalid_argument);
}

}  // namespace
}  // namespace cqed
