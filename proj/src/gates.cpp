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

#include "cqed/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cqed {

namespace {
constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}  // namespace

TargetItem::TargetItem(int value) : value_(value) {
  if (value < 0 || value > 3) {
    throw std::invalid_argument("target must be in [0, 3], got " + std::to_string(value));
  }
}

LogicalState LogicalState::basis(int index) { return {basis_vector(4, index)}; }

std::array<double, 4> LogicalState::probabilities() const {
  std::array<double, 4> p{};
  for (int k = 0; k < 4; ++k) p[static_cast<std::size_t>(k)] = probability(k);
  return p;
}

ComplexMatrix hadamard() {
  ComplexMatrix h(2, 2);
  h << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
  return h;
}

ComplexMatrix x_rot(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  ComplexMatrix x(2, 2);
  x << c, kI * s, kI * s, c;
  return x;
}

ComplexMatrix z_rot(double theta) {
  ComplexMatrix z = ComplexMatrix::Zero(2, 2);
  z(0, 0) = std::exp(-kI * (theta / 2));
  z(1, 1) = std::exp(kI * (theta / 2));
  return z;
}

ComplexMatrix y_rot(double alpha) {
  const double c = std::cos(alpha / 2), s = std::sin(alpha / 2);
  ComplexMatrix y(2, 2);
  y << c, -s, s, c;
  return y;
}

ComplexMatrix s_gate() {
  // Columns are the images of |0> and |1>.
  ComplexMatrix s(2, 2);
  s << -kI * kInvSqrt2, kI * kInvSqrt2, -kI * kInvSqrt2, -kI * kInvSqrt2;
  return s;
}

ComplexMatrix p_gate(double theta) {
  const Complex lo = std::exp(-kI * (theta / 2)) * kInvSqrt2;
  const Complex hi = std::exp(kI * (theta / 2)) * kInvSqrt2;
  ComplexMatrix p(2, 2);
  p << lo, lo, hi, -hi;
  return p;
}

ComplexMatrix i_qpg() {
  ComplexMatrix q = ComplexMatrix::Identity(4, 4);
  q(3, 3) = -1.0;
  return q;
}

ComplexMatrix oracle_reflection(TargetItem target) {
  ComplexMatrix o = ComplexMatrix::Identity(4, 4);
  o(target.value(), target.value()) = -1.0;
  return o;
}

std::pair<double, double> oracle_angles(TargetItem target) {
  switch (target.value()) {
    case 0: return {kPi, kPi};
    case 1: return {0.0, kPi};
    case 2: return {kPi, 0.0};
    default: return {0.0, 0.0};
  }
}

std::string_view gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::kPrepare: return "P";
    case GateKind::kPhaseGate: return "QPG";
    case GateKind::kHadamardBoth: return "H";
    case GateKind::kFinalRotation: return "S";
  }
  return "?";
}

ComplexMatrix GateSequence::compose() const {
  ComplexMatrix u = ComplexMatrix::Identity(4, 4);
  for (const auto& step : steps) u = step.matrix * u;
  return u;
}

LogicalState GateSequence::apply(const LogicalState& in) const {
  ComplexVector v = in.amplitudes;
  for (const auto& step : steps) v = cqed::apply(step.matrix, v);
  return {std::move(v)};
}

GateSequence grover_sequence(TargetItem target) {
  const auto [t1, t2] = oracle_angles(target);
  GateSequence seq;
  seq.steps.push_back({GateKind::kPrepare, tensor(p_gate(t1), p_gate(t2))});
  seq.steps.push_back({GateKind::kPhaseGate, i_qpg()});
  seq.steps.push_back({GateKind::kHadamardBoth, tensor(hadamard(), hadamard())});
  seq.steps.push_back({GateKind::kPhaseGate, i_qpg()});
  seq.steps.push_back({GateKind::kFinalRotation, tensor(s_gate(), s_gate())});
  return seq;
}

LogicalState run_ideal(TargetItem target) {
  return grover_sequence(target).apply(LogicalState::basis(0));
}

}  // namespace cqed
