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

#include "cqed/experiment.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cqed {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

// Single-qubit operator lifted to the physical space. Atom 2's |e> level is
// outside the qubit and left untouched.
ComplexMatrix lift_single_qubit(const ComplexMatrix& u, Atom atom, const PhysicalBasis& basis) {
  const auto dims = basis.subsystem_dims();
  if (atom == Atom::kA1) return embed(u, dims, 0);
  ComplexMatrix u3 = ComplexMatrix::Identity(3, 3);
  u3.topLeftCorner(2, 2) = u;
  return embed(u3, dims, 1);
}

// Without the bookkeeping phase.
ComplexMatrix rabi_matrix(const RabiRotation& r) {
  const double c = std::cos(r.angle / 2), s = std::sin(r.angle / 2);
  const Complex axis = std::exp(kI * r.axis_phase);
  // -i s (cos(phi) X + sin(phi) Y) = -i s [[0, e^{-i phi}], [e^{i phi}, 0]]
  ComplexMatrix u(2, 2);
  u << c, -kI * s * std::conj(axis), -kI * s * axis, c;
  return u;
}

}  // namespace

ErrorModel parse_error_model(std::string_view tag) {
  if (tag == "rabi_only") return ErrorModel::kRabiOnly;
  if (tag == "all_angles") return ErrorModel::kAllAngles;
  throw std::invalid_argument("unknown error model '" + std::string(tag) + "'");
}

std::string_view to_string(ErrorModel model) {
  return model == ErrorModel::kRabiOnly ? "rabi_only" : "all_angles";
}

FidelityMode parse_fidelity_mode(std::string_view tag) {
  if (tag == "marginal") return FidelityMode::kMarginal;
  if (tag == "strict") return FidelityMode::kStrict;
  throw std::invalid_argument("unknown fidelity mode '" + std::string(tag) + "'");
}

std::string_view to_string(FidelityMode mode) {
  return mode == FidelityMode::kMarginal ? "marginal" : "strict";
}

void ExperimentConfig::validate() const {
  if (!(omega_over_2pi > 0.0) || !std::isfinite(omega_over_2pi)) {
    throw std::invalid_argument("omega_over_2pi must be positive");
  }
  if (!(delta_over_omega >= 1.0) || !std::isfinite(delta_over_omega)) {
    throw std::invalid_argument("delta_over_omega must be >= 1");
  }
  if (!(std::abs(epsilon) <= 0.5)) throw std::invalid_argument("epsilon must satisfy |epsilon| <= 0.5");
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
}

CouplingParams ExperimentConfig::coupling() const {
  return CouplingParams::from_ratio(omega_over_2pi, delta_over_omega);
}

std::vector<PulseOp> compile_pulses(TargetItem target, double epsilon, ErrorModel error_model,
                                    double collision_duration, CompileOptions options) {
  if (!(collision_duration > 0.0)) throw std::invalid_argument("collision duration must be positive");
  const double rabi_scale = 1.0 + epsilon;
  const double z_scale = error_model == ErrorModel::kAllAngles ? rabi_scale : 1.0;
  const double phase_i = options.track_global_phase ? kPi / 2 : 0.0;
  const double phase_minus_i = options.track_global_phase ? -kPi / 2 : 0.0;

  std::vector<PulseOp> ops;
  ops.reserve(12);
  auto ry = [&](double alpha, Atom atom, double global_phase) {
    ops.emplace_back(RabiRotation{alpha * rabi_scale, kPi / 2, atom, global_phase});
  };
  auto rz = [&](double theta, Atom atom) { ops.emplace_back(StarkZ{theta * z_scale, atom}); };

  const auto [theta1, theta2] = oracle_angles(target);
  ry(-kPi / 2, Atom::kA1, phase_i);
  rz(theta1 + kPi, Atom::kA1);
  ry(-kPi / 2, Atom::kA2, phase_i);
  rz(theta2 + kPi, Atom::kA2);
  ops.emplace_back(Collision{collision_duration});
  for (Atom atom : {Atom::kA1, Atom::kA2}) {
    ry(-kPi / 2, atom, phase_i);
    rz(kPi, atom);
  }
  ops.emplace_back(Collision{collision_duration});
  ry(kPi / 2, Atom::kA1, phase_minus_i);
  ry(kPi / 2, Atom::kA2, phase_minus_i);
  return ops;
}

ComplexMatrix pulse_matrix(const PulseOp& op) {
  return std::visit(
      Overloaded{
          [](const RabiRotation& r) -> ComplexMatrix {
            return std::exp(kI * r.global_phase) * rabi_matrix(r);
          },
          [](const StarkZ& z) -> ComplexMatrix { return z_rot(z.angle); },
          [](const Collision&) -> ComplexMatrix {
            throw std::invalid_argument("pulse_matrix: a collision is not a single-qubit pulse");
          }},
      op);
}

ComplexMatrix compose_single_qubit(std::span<const PulseOp> ops, Atom atom) {
  ComplexMatrix u = ComplexMatrix::Identity(2, 2);
  for (const auto& op : ops) {
    if (std::holds_alternative<Collision>(op)) {
      throw std::invalid_argument("compose_single_qubit: collision in single-qubit segment");
    }
    const Atom on = std::holds_alternative<RabiRotation>(op) ? std::get<RabiRotation>(op).atom
                                                             : std::get<StarkZ>(op).atom;
    if (on == atom) u = pulse_matrix(op) * u;
  }
  return u;
}

std::vector<PhysicalState> trace_pulses(const ExperimentConfig& config,
                                        std::span<const PulseOp> pulses,
                                        const PhysicalState& initial) {
  const CouplingParams params = config.coupling();
  const PhysicalBasis& basis = initial.basis;

  // All collisions in a sequence share one duration; cache the last one.
  double cached_duration = -1.0;
  ComplexMatrix cached;
  auto collision_op = [&](double duration) -> const ComplexMatrix& {
    if (duration != cached_duration) {
      cached = collision_propagator(params, basis, duration, config.collision_model);
      if (config.collision_model == CollisionModel::kExact) {
        cached = atomic_frame_correction(params, basis, duration) * cached;
      }
      cached_duration = duration;
    }
    return cached;
  };

  std::vector<PhysicalState> states;
  states.reserve(pulses.size() + 1);
  states.push_back(initial);
  for (const auto& op : pulses) {
    const ComplexVector& cur = states.back().amplitudes;
    ComplexVector next = std::visit(
        Overloaded{[&](const RabiRotation& r) -> ComplexVector {
                     // The bookkeeping phase multiplies the whole state, not
                     // just the qubit levels: atom 2's |e> may hold amplitude.
                     const ComplexMatrix u = lift_single_qubit(rabi_matrix(r), r.atom, basis);
                     return ComplexVector(std::exp(kI * r.global_phase) * cqed::apply(u, cur));
                   },
                   [&](const StarkZ& z) -> ComplexVector {
                     return cqed::apply(lift_single_qubit(pulse_matrix(op), z.atom, basis), cur);
                   },
                   [&](const Collision& c) -> ComplexVector { return cqed::apply(collision_op(c.duration), cur); }},
        op);
    states.push_back({basis, std::move(next)});
  }
  return states;
}

RunResult run_physical(const ExperimentConfig& config, CompileOptions options) {
  config.validate();
  const CouplingParams params = config.coupling();
  const PhysicalBasis basis(config.n_max);
  const double gate_time = qpg_gate_time(params);
  const auto pulses = compile_pulses(config.target, config.epsilon, config.error_model,
                                     gate_time, options);

  const auto initial = PhysicalState::product(basis, Atom1Level::kG, Atom2Level::kG, 0);
  auto states = trace_pulses(config, pulses, initial);

  RunResult result;
  result.final_state = std::move(states.back());
  result.populations = atomic_marginal(result.final_state);
  result.leaked_photon_probability = photon_probability(result.final_state);

  const auto [a1, a2] = logical_levels(config.target.value());
  result.fidelity = config.fidelity_mode == FidelityMode::kMarginal
                        ? result.populations.at(a1, a2)
                        : vacuum_probability(result.final_state, a1, a2);

  int collision_index = 0;
  for (const auto& op : pulses) {
    if (const auto* c = std::get_if<Collision>(&op)) {
      result.timing.segments.push_back({"collision_" + std::to_string(++collision_index), c->duration});
      result.timing.total_time += c->duration;
    }
  }
  result.timing.gate_time = gate_time;
  return result;
}

}  // namespace cqed
