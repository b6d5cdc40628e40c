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

// Two Rydberg atoms coupled to one detuned cavity mode.
//
// Physical basis: atom 1 in {g, e}, atom 2 in {g, i, e}, field in Fock
// states 0..n_max. Index = (atom1 * 3 + atom2) * (n_max + 1) + n.
// Hamiltonians are in angular-frequency units (rad/s), times in seconds.

#include <array>
#include <string_view>

#include "cqed/gates.hpp"
#include "cqed/linalg.hpp"

namespace cqed {

enum class Atom1Level { kG = 0, kE = 1 };
enum class Atom2Level { kG = 0, kI = 1, kE = 2 };

class PhysicalBasis {
 public:
  static constexpr int kAtom1Dim = 2;
  static constexpr int kAtom2Dim = 3;

  explicit PhysicalBasis(int n_max = 2);

  int n_max() const noexcept { return n_max_; }
  int field_dim() const noexcept { return n_max_ + 1; }
  int dim() const noexcept { return kAtom1Dim * kAtom2Dim * field_dim(); }
  std::array<int, 3> subsystem_dims() const { return {kAtom1Dim, kAtom2Dim, field_dim()}; }
  int index(Atom1Level a1, Atom2Level a2, int photons) const;

  friend bool operator==(const PhysicalBasis&, const PhysicalBasis&) = default;

 private:
  int n_max_;
};

/// Omega is the vacuum Rabi angular frequency, delta = omega_atom - omega_cavity.
class CouplingParams {
 public:
  CouplingParams(double omega, double delta);

  /// Omega/2pi in Hz and delta given as a multiple of Omega.
  static CouplingParams from_ratio(double omega_over_2pi, double delta_over_omega);

  double omega() const noexcept { return omega_; }
  double delta() const noexcept { return delta_; }
  double lambda() const noexcept { return lambda_; }
  double ratio() const noexcept { return delta_ / omega_; }
  /// False when delta/omega < 4; the effective description degrades there.
  bool well_dispersive() const noexcept { return ratio() >= 4.0; }

 private:
  double omega_;
  double delta_;
  double lambda_;
};

enum class CollisionModel { kExact, kEffective };

CollisionModel parse_collision_model(std::string_view tag);
std::string_view to_string(CollisionModel model);

struct PhysicalState {
  PhysicalBasis basis;
  ComplexVector amplitudes;

  static PhysicalState product(const PhysicalBasis& basis, Atom1Level a1, Atom2Level a2,
                               int photons = 0);
  /// Maps |q1 q2> onto (g/e, g/i) with the field in vacuum.
  static PhysicalState lift(const PhysicalBasis& basis, const LogicalState& logical);
};

/// Atomic level-pair probabilities, traced over the field.
struct AtomicPopulations {
  std::array<std::array<double, PhysicalBasis::kAtom2Dim>, PhysicalBasis::kAtom1Dim> p{};

  double at(Atom1Level a1, Atom2Level a2) const {
    return p[static_cast<std::size_t>(a1)][static_cast<std::size_t>(a2)];
  }
  /// Population of the level pair encoding logical basis state `index`.
  double logical(int index) const;
  double total() const;
};

/// Level pair carrying logical basis state `index` (0..3).
std::pair<Atom1Level, Atom2Level> logical_levels(int index);

/// delta * sum_j |e_j><e_j| + (Omega/2) sum_j (a^dag S_j^- + a S_j^+),
/// frame rotating at the cavity frequency; |i_2> is decoupled at energy 0.
ComplexMatrix hamiltonian_exact(const CouplingParams& p, const PhysicalBasis& basis);

inline constexpr std::array<std::string_view, 5> kEffectiveBasisLabels{
    "g1g2", "g1i2", "e1g2", "g1e2", "e1i2"};

/// Collision Hamiltonian lambda [sum_j |e_j><e_j| + S1+ S2- + S1- S2+] on
/// the atomic states {g1g2, g1i2, e1g2, g1e2, e1i2}.
ComplexMatrix hamiltonian_effective(const CouplingParams& p);

/// The same generator on the full physical basis (identity on the field).
ComplexMatrix hamiltonian_effective_full(const CouplingParams& p, const PhysicalBasis& basis);

/// N = a^dag a + sum_j |e_j><e_j|.
ComplexMatrix excitation_number(const PhysicalBasis& basis);

/// pi / lambda.
double qpg_gate_time(const CouplingParams& p);

/// diag(1, 1, 1, -1) over {g1g2, g1i2, e1g2, e1i2}.
ComplexMatrix effective_qpg_unitary();

ComplexMatrix collision_propagator(const CouplingParams& p, const PhysicalBasis& basis, double t,
                                   CollisionModel model);

PhysicalState evolve_collision(const PhysicalState& s, const CouplingParams& p, double t,
                               CollisionModel model);

/// exp(+i delta N t): removes the free atomic precession accumulated in the
/// cavity frame so that amplitudes are referenced to the atomic transition
/// (the frame of the microwave sources). Commutes with the exact Hamiltonian.
ComplexMatrix atomic_frame_correction(const CouplingParams& p, const PhysicalBasis& basis,
                                      double t);

AtomicPopulations atomic_marginal(const PhysicalState& s);

/// Probability of one or more photons in the cavity.
double photon_probability(const PhysicalState& s);

/// |<a1 a2, 0|s>|^2.
double vacuum_probability(const PhysicalState& s, Atom1Level a1, Atom2Level a2);

}  // namespace cqed
