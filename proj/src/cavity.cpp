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

#include "cqed/cavity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cqed {

namespace {

ComplexMatrix annihilation(int field_dim) {
  ComplexMatrix a = ComplexMatrix::Zero(field_dim, field_dim);
  for (int n = 1; n < field_dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

// |g><e| on atom 1 ({g, e}) and atom 2 ({g, i, e}).
ComplexMatrix lowering_atom1() {
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  s(0, 1) = 1.0;
  return s;
}

ComplexMatrix lowering_atom2() {
  ComplexMatrix s = ComplexMatrix::Zero(3, 3);
  s(0, 2) = 1.0;
  return s;
}

ComplexMatrix excited_atom1() {
  ComplexMatrix e = ComplexMatrix::Zero(2, 2);
  e(1, 1) = 1.0;
  return e;
}

ComplexMatrix excited_atom2() {
  ComplexMatrix e = ComplexMatrix::Zero(3, 3);
  e(2, 2) = 1.0;
  return e;
}

ComplexMatrix on_atoms_and_field(const ComplexMatrix& a1, const ComplexMatrix& a2,
                                 const ComplexMatrix& field) {
  return tensor(tensor(a1, a2), field);
}

// Atomic part of the effective generator on the 6 level pairs.
ComplexMatrix effective_atomic(const CouplingParams& p) {
  const ComplexMatrix id1 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix id2 = ComplexMatrix::Identity(3, 3);
  const ComplexMatrix s1 = lowering_atom1();
  const ComplexMatrix s2 = lowering_atom2();
  ComplexMatrix h = tensor(excited_atom1(), id2) + tensor(id1, excited_atom2()) +
                    tensor(s1.adjoint(), s2) + tensor(s1, s2.adjoint());
  return p.lambda() * h;
}

}  // namespace

PhysicalBasis::PhysicalBasis(int n_max) : n_max_(n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1, got " + std::to_string(n_max));
}

int PhysicalBasis::index(Atom1Level a1, Atom2Level a2, int photons) const {
  if (photons < 0 || photons > n_max_) throw std::out_of_range("photon number out of range");
  return (static_cast<int>(a1) * kAtom2Dim + static_cast<int>(a2)) * field_dim() + photons;
}

CouplingParams::CouplingParams(double omega, double delta)
    : omega_(omega), delta_(delta), lambda_(omega * omega / (4.0 * delta)) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw std::invalid_argument("coupling omega must be positive and finite");
  }
  if (!(delta / omega >= 1.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("detuning must satisfy delta/omega >= 1");
  }
}

CouplingParams CouplingParams::from_ratio(double omega_over_2pi, double delta_over_omega) {
  const double omega = 2.0 * std::numbers::pi * omega_over_2pi;
  return {omega, delta_over_omega * omega};
}

CollisionModel parse_collision_model(std::string_view tag) {
  if (tag == "exact") return CollisionModel::kExact;
  if (tag == "effective") return CollisionModel::kEffective;
  throw std::invalid_argument("unknown collision model '" + std::string(tag) + "'");
}

std::string_view to_string(CollisionModel model) {
  return model == CollisionModel::kExact ? "exact" : "effective";
}

PhysicalState PhysicalState::product(const PhysicalBasis& basis, Atom1Level a1, Atom2Level a2,
                                     int photons) {
  return {basis, basis_vector(basis.dim(), basis.index(a1, a2, photons))};
}

std::pair<Atom1Level, Atom2Level> logical_levels(int index) {
  if (index < 0 || index > 3) throw std::out_of_range("logical index out of range");
  return {(index & 2) ? Atom1Level::kE : Atom1Level::kG,
          (index & 1) ? Atom2Level::kI : Atom2Level::kG};
}

PhysicalState PhysicalState::lift(const PhysicalBasis& basis, const LogicalState& logical) {
  if (logical.amplitudes.size() != 4) throw DimensionMismatch("lift: logical state must have 4 amplitudes");
  ComplexVector v = ComplexVector::Zero(basis.dim());
  for (int k = 0; k < 4; ++k) {
    const auto [a1, a2] = logical_levels(k);
    v(basis.index(a1, a2, 0)) = logical.amplitudes(k);
  }
  return {basis, std::move(v)};
}

double AtomicPopulations::logical(int index) const {
  const auto [a1, a2] = logical_levels(index);
  return at(a1, a2);
}

double AtomicPopulations::total() const {
  double sum = 0.0;
  for (const auto& row : p)
    for (double x : row) sum += x;
  return sum;
}

ComplexMatrix hamiltonian_exact(const CouplingParams& p, const PhysicalBasis& basis) {
  const int nf = basis.field_dim();
  const ComplexMatrix id1 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix id2 = ComplexMatrix::Identity(3, 3);
  const ComplexMatrix idf = ComplexMatrix::Identity(nf, nf);
  const ComplexMatrix a = annihilation(nf);
  const ComplexMatrix ad = a.adjoint();
  const ComplexMatrix s1 = lowering_atom1();
  const ComplexMatrix s2 = lowering_atom2();

  ComplexMatrix detuning = on_atoms_and_field(excited_atom1(), id2, idf) +
                           on_atoms_and_field(id1, excited_atom2(), idf);
  ComplexMatrix coupling = on_atoms_and_field(s1, id2, ad) +
                           on_atoms_and_field(s1.adjoint(), id2, a) +
                           on_atoms_and_field(id1, s2, ad) +
                           on_atoms_and_field(id1, s2.adjoint(), a);
  return p.delta() * detuning + (p.omega() / 2.0) * coupling;
}

ComplexMatrix hamiltonian_effective(const CouplingParams& p) {
  const ComplexMatrix full = effective_atomic(p);
  // Atomic pair index is atom1 * 3 + atom2.
  constexpr std::array<int, 5> kRows{0, 1, 3, 2, 4};  // g1g2, g1i2, e1g2, g1e2, e1i2
  ComplexMatrix h(5, 5);
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) h(r, c) = full(kRows[r], kRows[c]);
  return h;
}

ComplexMatrix hamiltonian_effective_full(const CouplingParams& p, const PhysicalBasis& basis) {
  return tensor(effective_atomic(p), ComplexMatrix::Identity(basis.field_dim(), basis.field_dim()));
}

ComplexMatrix excitation_number(const PhysicalBasis& basis) {
  const int nf = basis.field_dim();
  const ComplexMatrix a = annihilation(nf);
  const ComplexMatrix id1 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix id2 = ComplexMatrix::Identity(3, 3);
  const ComplexMatrix idf = ComplexMatrix::Identity(nf, nf);
  return on_atoms_and_field(id1, id2, a.adjoint() * a) +
         on_atoms_and_field(excited_atom1(), id2, idf) +
         on_atoms_and_field(id1, excited_atom2(), idf);
}

double qpg_gate_time(const CouplingParams& p) {
  if (!(p.lambda() > 0.0)) throw std::invalid_argument("qpg_gate_time: lambda must be positive");
  return std::numbers::pi / p.lambda();
}

ComplexMatrix effective_qpg_unitary() { return i_qpg(); }

ComplexMatrix collision_propagator(const CouplingParams& p, const PhysicalBasis& basis, double t,
                                   CollisionModel model) {
  const ComplexMatrix h = model == CollisionModel::kExact ? hamiltonian_exact(p, basis)
                                                          : hamiltonian_effective_full(p, basis);
  return propagator(h, t);
}

PhysicalState evolve_collision(const PhysicalState& s, const CouplingParams& p, double t,
                               CollisionModel model) {
  return {s.basis, cqed::apply(collision_propagator(p, s.basis, t, model), s.amplitudes)};
}

ComplexMatrix atomic_frame_correction(const CouplingParams& p, const PhysicalBasis& basis,
                                      double t) {
  const ComplexMatrix n = excitation_number(basis);
  ComplexMatrix u = ComplexMatrix::Zero(basis.dim(), basis.dim());
  for (int k = 0; k < basis.dim(); ++k) {
    // N is diagonal with integer entries; reduce the phase before exp().
    const double phase = std::remainder(p.delta() * t * n(k, k).real(), 2.0 * std::numbers::pi);
    u(k, k) = std::exp(kI * phase);
  }
  return u;
}

AtomicPopulations atomic_marginal(const PhysicalState& s) {
  AtomicPopulations out;
  const int nf = s.basis.field_dim();
  for (int a1 = 0; a1 < PhysicalBasis::kAtom1Dim; ++a1) {
    for (int a2 = 0; a2 < PhysicalBasis::kAtom2Dim; ++a2) {
      double sum = 0.0;
      for (int n = 0; n < nf; ++n) {
        sum += std::norm(s.amplitudes(s.basis.index(static_cast<Atom1Level>(a1),
                                                     static_cast<Atom2Level>(a2), n)));
      }
      out.p[static_cast<std::size_t>(a1)][static_cast<std::size_t>(a2)] = sum;
    }
  }
  return out;
}

double photon_probability(const PhysicalState& s) {
  double sum = 0.0;
  const int nf = s.basis.field_dim();
  for (int k = 0; k < s.basis.dim(); ++k) {
    if (k % nf != 0) sum += std::norm(s.amplitudes(k));
  }
  return sum;
}

double vacuum_probability(const PhysicalState& s, Atom1Level a1, Atom2Level a2) {
  return std::norm(s.amplitudes(s.basis.index(a1, a2, 0)));
}

}  // namespace cqed
