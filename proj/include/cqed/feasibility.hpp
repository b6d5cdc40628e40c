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

#include <optional>
#include <string>
#include <vector>

namespace cqed {

struct FeasibilityInputs {
  double omega_over_2pi = 5.0e4;   // Hz
  double delta_over_omega = 4.0;
  double interaction_length = 0.01;  // m, path length of an atom through the mode
  double photon_lifetime = 1.0e-3;   // s
  /// Replaces the computed two-gate time when deriving the velocity and
  /// lifetime ratio.
  std::optional<double> total_time_override;
};

/// Design figures quoted for this setup. They are mutually inconsistent
/// with each other and with lambda t = pi; the report prints both.
inline constexpr double kNominalTwoGateTime = 2.5e-4;  // s
inline constexpr double kNominalTotalInteraction = 120e-6;  // s

inline constexpr double kLifetimeWarnRatio = 0.5;

struct FeasibilityReport {
  double lambda = 0.0;            // rad/s
  double lambda_over_2pi = 0.0;   // Hz
  double gate_time = 0.0;         // s, pi / lambda
  double two_gate_time = 0.0;     // s
  double total_time = 0.0;        // s, two_gate_time unless overridden
  double velocity = 0.0;          // m/s
  double lifetime_ratio = 0.0;    // total_time / photon_lifetime
  bool pass = false;              // lifetime_ratio < 0.5
  double nominal_two_gate_time = kNominalTwoGateTime;
  double nominal_total_interaction = kNominalTotalInteraction;
  std::vector<std::string> notes;
};

FeasibilityReport feasibility_report(const FeasibilityInputs& in);

}  // namespace cqed
