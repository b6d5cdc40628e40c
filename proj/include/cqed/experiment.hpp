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

// End-to-end physical Grover run: classical microwave pulses on each atom,
// two cavity-assisted collisions, projective readout of the atomic levels.

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cqed/cavity.hpp"
#include "cqed/gates.hpp"

namespace cqed {

/// rabi_only scales resonant Rabi angles by (1 + epsilon); all_angles also
/// scales the Stark Z phases. Collision durations are never scaled.
enum class ErrorModel { kRabiOnly, kAllAngles };

/// marginal: target level pair traced over the field. strict: target level
/// pair with the field in vacuum.
enum class FidelityMode { kMarginal, kStrict };

ErrorModel parse_error_model(std::string_view tag);
std::string_view to_string(ErrorModel model);
FidelityMode parse_fidelity_mode(std::string_view tag);
std::string_view to_string(FidelityMode mode);

struct ExperimentConfig {
  double omega_over_2pi = 5.0e4;  // Hz
  double delta_over_omega = 4.0;
  TargetItem target{3};
  double epsilon = 0.0;
  int n_max = 2;
  CollisionModel collision_model = CollisionModel::kExact;
  ErrorModel error_model = ErrorModel::kRabiOnly;
  FidelityMode fidelity_mode = FidelityMode::kMarginal;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
  CouplingParams coupling() const;
};

enum class Atom { kA1 = 1, kA2 = 2 };

/// Resonant microwave pulse: exp(-i angle/2 (cos(phase) X + sin(phase) Y)),
/// times e^{i global_phase}. axis_phase = pi/2 is a rotation about y.
struct RabiRotation {
  double angle;
  double axis_phase;
  Atom atom;
  double global_phase = 0.0;
};

/// Stark-shift phase: z_rot(angle) on the qubit levels of one atom.
struct StarkZ {
  double angle;
  Atom atom;
};

struct Collision {
  double duration;  // seconds
};

using PulseOp = std::variant<RabiRotation, StarkZ, Collision>;

struct CompileOptions {
  /// Attach the global phase of each decomposition so that the composed
  /// pulses equal the ideal gate matrices exactly. Has no physical effect.
  bool track_global_phase = false;
};

/// P1(t1) P2(t2) -> collision -> H1 H2 -> collision -> S1 S2, with
///   S = e^{-i pi/2} R_y(pi/2)
///   H = i Z(pi) R_y(-pi/2)
///   P(t) = i Z(t + pi) R_y(-pi/2)
/// Each atom's R_y precedes its Z within a gate.
std::vector<PulseOp> compile_pulses(TargetItem target, double epsilon, ErrorModel error_model,
                                    double collision_duration, CompileOptions options = {});

/// 2x2 unitary of a single-qubit pulse on the qubit levels of its atom.
ComplexMatrix pulse_matrix(const PulseOp& op);

/// Ordered product of the single-qubit pulses in `ops` acting on `atom`.
/// Collisions are not allowed in `ops`.
ComplexMatrix compose_single_qubit(std::span<const PulseOp> ops, Atom atom);

struct TimedSegment {
  std::string label;
  double duration;  // seconds
};

struct TimingBudget {
  std::vector<TimedSegment> segments;
  double gate_time = 0.0;
  double total_time = 0.0;
};

struct RunResult {
  double fidelity = 0.0;
  AtomicPopulations populations;
  TimingBudget timing;
  double leaked_photon_probability = 0.0;
  PhysicalState final_state{PhysicalBasis{}, {}};
};

/// Simulates the pulse sequence from |g1 g2, 0>. Single-qubit pulses are
/// instantaneous; exact-model collisions are reported in the frame of the
/// atomic transitions.
RunResult run_physical(const ExperimentConfig& config, CompileOptions options = {});

/// Applies `pulses` to `initial` under `config`'s coupling and collision
/// model, returning the state after every op (including the initial state).
std::vector<PhysicalState> trace_pulses(const ExperimentConfig& config,
                                        std::span<const PulseOp> pulses,
                                        const PhysicalState& initial);

}  // namespace cqed
