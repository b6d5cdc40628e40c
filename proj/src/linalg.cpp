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

#include "cqed/linalg.hpp"

#include <cmath>
#include <numeric>

namespace cqed {

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix tensor(std::span<const ComplexMatrix> factors) {
  if (factors.empty()) return ComplexMatrix::Identity(1, 1);
  ComplexMatrix out = factors.front();
  for (const auto& f : factors.subspan(1)) out = tensor(out, f);
  return out;
}

ComplexMatrix embed(const ComplexMatrix& u, std::span<const int> subsystem_dims, int which) {
  if (which < 0 || static_cast<std::size_t>(which) >= subsystem_dims.size()) {
    throw std::out_of_range("embed: subsystem index " + std::to_string(which) + " out of range");
  }
  const int d = subsystem_dims[static_cast<std::size_t>(which)];
  if (u.rows() != d || u.cols() != d) {
    throw DimensionMismatch("embed: operator is " + std::to_string(u.rows()) + "x" +
                            std::to_string(u.cols()) + " but subsystem has dimension " +
                            std::to_string(d));
  }
  auto prod = [](std::span<const int> dims) {
    return std::accumulate(dims.begin(), dims.end(), Eigen::Index{1},
                           [](Eigen::Index acc, int x) { return acc * x; });
  };
  const Eigen::Index left = prod(subsystem_dims.first(static_cast<std::size_t>(which)));
  const Eigen::Index right = prod(subsystem_dims.subspan(static_cast<std::size_t>(which) + 1));
  return tensor(tensor(ComplexMatrix::Identity(left, left), u),
                ComplexMatrix::Identity(right, right));
}

bool is_hermitian(const ComplexMatrix& h, double tol) {
  if (h.rows() != h.cols()) return false;
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  return (h - h.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const ComplexMatrix id = ComplexMatrix::Identity(u.rows(), u.cols());
  return ((u.adjoint() * u) - id).cwiseAbs().maxCoeff() <= tol;
}

ComplexMatrix propagator(const ComplexMatrix& h, double t) {
  if (h.rows() != h.cols()) throw InvalidOperator("propagator: generator is not square");
  if (!is_hermitian(h)) throw InvalidOperator("propagator: generator is not Hermitian");
  if (!(t >= 0.0)) throw std::invalid_argument("propagator: time must be non-negative");

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
  if (eig.info() != Eigen::Success) throw NumericalError("propagator: eigendecomposition failed");

  const auto& vals = eig.eigenvalues();
  ComplexVector phases(vals.size());
  for (Eigen::Index k = 0; k < vals.size(); ++k) phases(k) = std::exp(-kI * (vals(k) * t));
  const ComplexMatrix& vecs = eig.eigenvectors();
  ComplexMatrix u = vecs * phases.asDiagonal() * vecs.adjoint();
  if (!is_unitary(u)) throw NumericalError("propagator: result is not unitary within tolerance");
  return u;
}

ComplexVector apply(const ComplexMatrix& u, const ComplexVector& s) {
  if (u.cols() != s.size()) {
    throw DimensionMismatch("apply: operator has " + std::to_string(u.cols()) +
                            " columns, state has " + std::to_string(s.size()) + " entries");
  }
  return u * s;
}

double overlap_probability(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("overlap_probability: dimension mismatch");
  return std::norm(a.dot(b));
}

double expectation(const ComplexMatrix& op, const ComplexVector& s) {
  if (op.cols() != s.size() || op.rows() != s.size()) {
    throw DimensionMismatch("expectation: dimension mismatch");
  }
  return s.dot(op * s).real();
}

ComplexVector basis_vector(int dim, int index) {
  if (index < 0 || index >= dim) throw std::out_of_range("basis_vector: index out of range");
  ComplexVector v = ComplexVector::Zero(dim);
  v(index) = 1.0;
  return v;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("max_abs_diff: shape mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

bool equal_up_to_global_phase(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) == 0.0) return a.cwiseAbs().maxCoeff() <= tol;
  if (std::abs(a(r, c)) == 0.0) return false;
  const Complex phase = (a(r, c) / b(r, c)) / std::abs(a(r, c) / b(r, c));
  return (a - phase * b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace cqed
