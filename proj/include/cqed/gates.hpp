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

// Ideal two-qubit layer for the Grover search on two qubits.
//
// Basis order for every 4x4 matrix is |00>, |01>, |10>, |11> with qubit 1
// as the most significant factor. Qubit 1 lives on atom A1 (1 = e, 0 = g),
// qubit 2 on atom A2 (1 = i, 0 = g).

#include <array>
#include <string_view>
#include <utility>
#include <vector>

#include "cqed/linalg.hpp"

namespace cqed {

/// Marked item |tau> of the search, one of |00>, |01>, |10>, |11>.
class TargetItem {
 public:
  explicit TargetItem(int value);
  int value() const noexcept { return value_; }
  friend bool operator==(TargetItem, TargetItem) = default;

 private:
  int value_;
};

inline constexpr std::array<std::string_view, 4> kLogicalLabels{"00", "01", "10", "11"};

struct LogicalState {
  ComplexVector amplitudes;

  static LogicalState basis(int index);
  double probability(int index) const { return std::norm(amplitudes(index)); }
  std::array<double, 4> probabilities() const;
};

ComplexMatrix hadamard();
/// [[cos t/2, i sin t/2], [i sin t/2, cos t/2]]
ComplexMatrix x_rot(double theta);
/// diag(e^{-i t/2}, e^{i t/2})
ComplexMatrix z_rot(double theta);
/// R_y(a) = [[cos a/2, -sin a/2], [sin a/2, cos a/2]]; used by the pulse layer.
ComplexMatrix y_rot(double alpha);
ComplexMatrix s_gate();
ComplexMatrix p_gate(double theta);
ComplexMatrix i_qpg();

/// I - 2|tau><tau|.
ComplexMatrix oracle_reflection(TargetItem target);

/// Z rotation angles (theta1, theta2) that turn I_QPG into the oracle for
/// `target`, up to a global phase.
std::pair<double, double> oracle_angles(TargetItem target);

enum class GateKind { kPrepare, kPhaseGate, kHadamardBoth, kFinalRotation };

std::string_view gate_kind_name(GateKind kind);

struct GateStep {
  GateKind kind;
  ComplexMatrix matrix;  // 4x4
};

struct GateSequence {
  std::vector<GateStep> steps;  // applied first to last

  /// Product of all steps, last step leftmost.
  ComplexMatrix compose() const;
  LogicalState apply(const LogicalState& in) const;
};

/// P(t1) x P(t2), I_QPG, H x H, I_QPG, S x S.
GateSequence grover_sequence(TargetItem target);

/// Runs the Grover sequence on |00>.
LogicalState run_ideal(TargetItem target);

}  // namespace cqed
