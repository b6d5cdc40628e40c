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

#include <gtest/gtest.h>

#include "cqed/feasibility.hpp"

namespace cqed {
namespace {

TEST(Feasibility, DefaultArithmetic) {
  const auto r = feasibility_report({});
  EXPECT_NEAR(r.lambda_over_2pi, 3125.0, 1e-9);
  EXPECT_NEAR(r.gate_time, 1.6e-4, 1e-15);
  EXPECT_NEAR(r.two_gate_time, 3.2e-4, 1e-15);
  EXPECT_EQ(r.total_time, r.two_gate_time);
  EXPECT_NEAR(r.lifetime_ratio, 0.32, 1e-12);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.nominal_two_gate_time, 2.5e-4);
  EXPECT_EQ(r.nominal_total_interaction, 120e-6);
  EXPECT_GE(r.notes.size(), 2u);
}

TEST(Feasibility, VelocityFromOverride) {
  FeasibilityInputs in;
  in.interaction_length = 0.01;
  in.total_time_override = 2.5e-4;
  const auto r = feasibility_report(in);
  EXPECT_NEAR(r.velocity, 40.0, 1e-9);
  EXPECT_NEAR(r.gate_time, 1.6e-4, 1e-15);
}

TEST(Feasibility, WarnsForShortLifetime) {
  FeasibilityInputs in;
  in.photon_lifetime = 5e-4;
  const auto r = feasibility_report(in);
  EXPECT_FALSE(r.pass);
}

TEST(Feasibility, RejectsNonPositive) {
  for (auto mutate : {+[](FeasibilityInputs& i) { i.omega_over_2pi = 0; },
                      +[](FeasibilityInputs& i) { i.delta_over_omega = -1; },
                      +[](FeasibilityInputs& i) { i.interaction_length = 0; },
                      +[](FeasibilityInputs& i) { i.photon_lifetime = -1e-3; },
                      +[](FeasibilityInputs& i) { i.total_time_override = 0.0; }}) {
    FeasibilityInputs in;
    mutate(in);
    EXPECT_THROW(feasibility_report(in), std::invalid_argument);
  }
}

}  // namespace
}  // namespace cqed
