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

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "cqed/cavity.hpp"
#include "oracles.hpp"

namespace cqed {
namespace {

constexpr double kPi = std::numbers::pi;
using A1 = Atom1Level;
using A2 = Atom2Level;

CouplingParams default_params() { return CouplingParams::from_ratio(5.0e4, 4.0); }

TEST(Basis, DimensionsAndIndex) {
  const PhysicalBasis b(2);
  EXPECT_EQ(b.dim(), 18);
  EXPECT_EQ(PhysicalBasis(3).dim(), 24);
  EXPECT_EQ(b.index(A1::kG, A2::kG, 0), 0);
  EXPECT_EQ(b.index(A1::kE, A2::kI, 0), (1 * 3 + 1) * 3);
  EXPECT_THROW(PhysicalBasis(0), std::invalid_argument);
  EXPECT_THROW(b.index(A1::kG, A2::kG, 3), std::out_of_range);
}

TEST(Params, LambdaAndGuards) {
  const auto p = default_params();
  EXPECT_EQ(p.lambda(), p.omega() * p.omega() / (4.0 * p.delta()));
  EXPECT_NEAR(p.lambda() / (2 * kPi), 3125.0, 1e-9);
  EXPECT_TRUE(p.well_dispersive());
  EXPECT_FALSE(CouplingParams::from_ratio(5.0e4, 2.0).well_dispersive());
  EXPECT_THROW(CouplingParams(1.0, 0.5), std::invalid_argument);
  EXPECT_THROW(CouplingParams(0.0, 1.0), std::invalid_argument);
}

TEST(ExactHamiltonian, MatrixElements) {
  const auto p = default_params();
  const PhysicalBasis b(2);
  const ComplexMatrix h = hamiltonian_exact(p, b);
  EXPECT_TRUE(is_hermitian(h));
  EXPECT_NEAR(h(b.index(A1::kG, A2::kG, 1), b.index(A1::kE, A2::kG, 0)).real(), p.omega() / 2, 1e-9);
  EXPECT_NEAR(h(b.index(A1::kE, A2::kI, 0), b.index(A1::kE, A2::kI, 0)).real(), p.delta(), 1e-9);
  // Photon-number dependence of the coupling: <g g,2|H|e g,1> = sqrt(2) Omega/2.
  EXPECT_NEAR(h(b.index(A1::kG, A2::kG, 2), b.index(A1::kE, A2::kG, 1)).real(),
              std::sqrt(2.0) * p.omega() / 2, 1e-9);
  // |i2> is decoupled.
  const int gi0 = b.index(A1::kG, A2::kI, 0);
  EXPECT_EQ(h.row(gi0).cwiseAbs().maxCoeff(), 0.0);
}

TEST(ExactHamiltonian, CommutesWithExcitationNumber) {
  const auto p = default_params();
  for (int n_max : {1, 2, 3}) {
    const PhysicalBasis b(n_max);
    const ComplexMatrix h = hamiltonian_exact(p, b);
    const ComplexMatrix n = excitation_number(b);
    // H only connects states of equal N, including at the Fock cutoff.
    EXPECT_LT((h * n - n * h).cwiseAbs().maxCoeff(), 1e-6 * p.omega()) << n_max;
  }
}

TEST(ExactHamiltonian, AtomSwapSymmetry) {
  const auto p = default_params();
  const PhysicalBasis b(2);
  const ComplexMatrix h = hamiltonian_exact(p, b);
  // Permutation exchanging the {g, e} manifolds of the two atoms; atom 2's
  // |i> states are left in place.
  std::vector<int> perm(static_cast<std::size_t>(b.dim()));
  for (int k = 0; k < b.dim(); ++k) perm[static_cast<std::size_t>(k)] = k;
  for (int n = 0; n <= b.n_max(); ++n) {
    const int eg = b.index(A1::kE, A2::kG, n), ge = b.index(A1::kG, A2::kE, n);
    std::swap(perm[static_cast<std::size_t>(eg)], perm[static_cast<std::size_t>(ge)]);
  }
  ComplexMatrix swapped(b.dim(), b.dim());
  for (int r = 0; r < b.dim(); ++r)
    for (int c = 0; c < b.dim(); ++c)
      swapped(r, c) = h(perm[static_cast<std::size_t>(r)], perm[static_cast<std::size_t>(c)]);
  EXPECT_EQ(swapped, h);
}

TEST(EffectiveHamiltonian, Entries) {
  const auto p = default_params();
  const ComplexMatrix h = hamiltonian_effective(p);
  ASSERT_EQ(h.rows(), 5);
  EXPECT_TRUE(is_hermitian(h));
  EXPECT_DOUBLE_EQ(h(4, 4).real(), p.lambda());  // e1i2
  EXPECT_DOUBLE_EQ(h(2, 3).real(), p.lambda());  // e1g2 <-> g1e2
  EXPECT_DOUBLE_EQ(h(2, 2).real(), p.lambda());
  EXPECT_DOUBLE_EQ(h(3, 3).real(), p.lambda());
  EXPECT_EQ(h(1, 1), Complex(0.0));
  EXPECT_EQ(h(0, 0), Complex(0.0));
}

TEST(GateTime, Values) {
  const auto p = default_params();
  EXPECT_NEAR(qpg_gate_time(p), 1.6e-4, 1e-15);
  EXPECT_NEAR(p.lambda() * qpg_gate_time(p), kPi, 1e-12);
  const auto wide = CouplingParams::from_ratio(5.0e4, 8.0);
  EXPECT_NEAR(qpg_gate_time(wide), 2.0 * qpg_gate_time(p), 1e-15);
}

TEST(EffectiveGate, PropagatorIsPhaseGateOnLogicalSubspace) {
  const auto p = default_params();
  const ComplexMatrix u = propagator(hamiltonian_effective(p), qpg_gate_time(p));
  constexpr int kLogical[4] = {0, 1, 2, 4};  // g1g2, g1i2, e1g2, e1i2
  ComplexMatrix sub(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) sub(r, c) = u(kLogical[r], kLogical[c]);
  EXPECT_TRUE(equal_up_to_global_phase(sub, effective_qpg_unitary(), 1e-10));
  EXPECT_LT(max_abs_diff(sub, effective_qpg_unitary()), 1e-10);
  // No population left on |g1 e2>.
  for (int c : kLogical) EXPECT_LT(std::norm(u(3, c)), 1e-20);
}

TEST(Evolution, DarkStatesUnchanged) {
  const auto p = default_params();
  const PhysicalBasis b(2);
  for (auto model : {CollisionModel::kExact, CollisionModel::kEffective}) {
    for (auto a2 : {A2::kG, A2::kI}) {
      const auto s = PhysicalState::product(b, A1::kG, a2, 0);
      for (double t : {1e-6, 1.6e-4, 3.3e-3}) {
        const auto out = evolve_collision(s, p, t, model);
        EXPECT_LT((out.amplitudes - s.amplitudes).cwiseAbs().maxCoeff(), 1e-12);
      }
    }
  }
}

TEST(Evolution, ExactSingleExcitationFollowsDressedStateFormula) {
  const auto p = default_params();
  const PhysicalBasis b(2);
  const double t = qpg_gate_time(p);
  const auto out = evolve_collision(PhysicalState::product(b, A1::kE, A2::kI, 0), p, t,
                                    CollisionModel::kExact);
  const Complex amp = out.amplitudes(b.index(A1::kE, A2::kI, 0));
  const double leak = std::norm(out.amplitudes(b.index(A1::kG, A2::kI, 1)));

  const Complex oracle_amp = testing::dressed_upper_amplitude(p.delta(), p.omega() / 2, t);
  const double oracle_leak = testing::dressed_lower_probability(p.delta(), p.omega() / 2, t);
  EXPECT_LT(std::abs(amp - oracle_amp), 1e-9);
  EXPECT_NEAR(leak, oracle_leak, 1e-9);
  EXPECT_NEAR(amp.real(), -1.0, 5e-3);
  // Leakage stays inside the dressed-state envelope Omega^2 / (delta^2 + Omega^2).
  const double envelope = p.omega() * p.omega() / (p.delta() * p.delta() + p.omega() * p.omega());
  EXPECT_LE(leak, envelope);
  EXPECT_NEAR(out.amplitudes.norm(), 1.0, 1e-10);
}

TEST(Evolution, EffectiveModelReproducesPhaseGate) {
  const auto p = default_params();
  const PhysicalBasis b(2);
  const double t = qpg_gate_time(p);
  for (int k = 0; k < 4; ++k) {
    const auto [a1, a2] = logical_levels(k);
    const auto out = evolve_collision(PhysicalState::product(b, a1, a2, 0), p, t,
                                      CollisionModel::kEffective);
    const Complex expected = effective_qpg_unitary()(k, k);
    EXPECT_LT(std::abs(out.amplitudes(b.index(a1, a2, 0)) - expected), 1e-10) << k;
  }
}

TEST(Evolution, ExcitationNumberConserved) {
  const auto p = default_params();
  const PhysicalBasis b(2);
  const ComplexMatrix n = excitation_number(b);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const PhysicalState s{b, testing::random_state(rng, b.dim())};
    const double n0 = expectation(n, s.amplitudes);
    for (double t : {1e-5, 8e-5, 1.6e-4}) {
      const auto out = evolve_collision(s, p, t, CollisionModel::kExact);
      EXPECT_NEAR(expectation(n, out.amplitudes), n0, 1e-9);
    }
  }
}

TEST(Evolution, DispersiveConvergenceMonotone) {
  const PhysicalBasis b(2);
  double previous_worst = 0.0;
  for (double ratio : {4.0, 8.0, 12.0, 16.0, 20.0}) {
    const auto p = CouplingParams::from_ratio(5.0e4, ratio);
    const double t = qpg_gate_time(p);
    const ComplexMatrix frame = atomic_frame_correction(p, b, t);
    double worst = 1.0;
    for (int k = 0; k < 4; ++k) {
      const auto [a1, a2] = logical_levels(k);
      const auto s = PhysicalState::product(b, a1, a2, 0);
      const auto exact = evolve_collision(s, p, t, CollisionModel::kExact);
      const auto eff = evolve_collision(s, p, t, CollisionModel::kEffective);
      worst = std::min(worst, overlap_probability(frame * exact.amplitudes, eff.amplitudes));
    }
    EXPECT_GT(worst, previous_worst) << ratio;
    previous_worst = worst;
  }
  EXPECT_GT(previous_worst, 0.99);
}

TEST(Frame, CorrectionCommutesWithExactHamiltonian) {
  const auto p = CouplingParams::from_ratio(5.0e4, 4.5);
  const PhysicalBasis b(2);
  const ComplexMatrix f = atomic_frame_correction(p, b, 1.3e-4);
  const ComplexMatrix h = hamiltonian_exact(p, b);
  EXPECT_TRUE(is_unitary(f));
  EXPECT_LT((f * h - h * f).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(Marginal, Readout) {
  const PhysicalBasis b(2);
  const auto pure = atomic_marginal(PhysicalState::product(b, A1::kE, A2::kI, 0));
  EXPECT_EQ(pure.at(A1::kE, A2::kI), 1.0);
  EXPECT_EQ(pure.total(), 1.0);

  ComplexVector v = ComplexVector::Zero(b.dim());
  v(b.index(A1::kE, A2::kI, 0)) = 1.0 / std::sqrt(2.0);
  v(b.index(A1::kG, A2::kI, 1)) = 1.0 / std::sqrt(2.0);
  const PhysicalState split{b, v};
  const auto m = atomic_marginal(split);
  EXPECT_NEAR(m.at(A1::kE, A2::kI), 0.5, 1e-15);
  EXPECT_NEAR(m.at(A1::kG, A2::kI), 0.5, 1e-15);
  EXPECT_NEAR(m.total(), 1.0, 1e-10);
  EXPECT_NEAR(photon_probability(split), 0.5, 1e-15);
  EXPECT_NEAR(vacuum_probability(split, A1::kE, A2::kI), 0.5, 1e-15);
}

TEST(Marginal, LiftedIdealResult) {
  const PhysicalBasis b(2);
  const auto lifted = PhysicalState::lift(b, run_ideal(TargetItem(3)));
  const auto m = atomic_marginal(lifted);
  EXPECT_NEAR(m.at(A1::kE, A2::kI), 1.0, 1e-10);
  EXPECT_NEAR(m.total(), 1.0, 1e-10);
}

TEST(Models, ParseTags) {
  EXPECT_EQ(parse_collision_model("exact"), CollisionModel::kExact);
  EXPECT_EQ(parse_collision_model("effective"), CollisionModel::kEffective);
  EXPECT_THROW(parse_collision_model("adiabatic"), std::invalid_argument);
}

}  // namespace
}  // namespace cqed
