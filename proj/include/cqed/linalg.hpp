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

#include <complex>
#include <span>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace cqed {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Thrown when an operator does not satisfy the structural property an
/// operation requires (e.g. a non-Hermitian generator).
class InvalidOperator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computed result violates a numerical guarantee, e.g. a
/// propagator that is not unitary to the required tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kNormTol = 1e-10;

/// Kronecker product a ⊗ b. Row index of the result is (row_a * rows_b + row_b).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product of a list of factors, left to right.
ComplexMatrix tensor(std::span<const ComplexMatrix> factors);

/// I ⊗ ... ⊗ u ⊗ ... ⊗ I where u sits at position `which` of `subsystem_dims`.
ComplexMatrix embed(const ComplexMatrix& u, std::span<const int> subsystem_dims, int which);

/// exp(-i h t) for Hermitian h and t >= 0, via Hermitian eigendecomposition.
///
/// Hermiticity is checked entrywise with a tolerance of 1e-12 scaled by the
/// largest entry magnitude (Hamiltonians here carry entries in rad/s). The
/// result is checked for unitarity within 1e-10; a violation raises
/// NumericalError.
ComplexMatrix propagator(const ComplexMatrix& h, double t);

ComplexVector apply(const ComplexMatrix& u, const ComplexVector& s);

/// |<a|b>|^2 for normalized vectors of equal length.
double overlap_probability(const ComplexVector& a, const ComplexVector& b);

/// Real part of <s|op|s>.
double expectation(const ComplexMatrix& op, const ComplexVector& s);

ComplexVector basis_vector(int dim, int index);

bool is_hermitian(const ComplexMatrix& h, double tol = kHermitianTol);
bool is_unitary(const ComplexMatrix& u, double tol = kUnitaryTol);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// True when a = e^{i phi} b for a single phase phi, entrywise within tol.
/// The phase is fixed by the largest-magnitude entry of b.
bool equal_up_to_global_phase(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

}  // namespace cqed
