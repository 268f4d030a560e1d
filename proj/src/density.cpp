// Copyright 2026 The uqd Authors
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

#include "uqd/density.hpp"

#include <cmath>
#include <string>

#include "uqd/errors.hpp"

namespace uqd {

DensityOperator::DensityOperator(Eigen::MatrixXcd entries, double tol)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw DomainError("density operator must be a non-empty square matrix");
  }
  if (hermiticity_error(entries_) > tol) throw DomainError("density operator is not Hermitian");
  const std::complex<double> tr = entries_.trace();
  if (std::abs(tr - 1.0) > tol) {
    throw DomainError("density operator trace is " + std::to_string(tr.real()) + ", not 1");
  }
}

void DensityOperator::validate(double tol) const {
  if (hermiticity_error(entries_) > tol) throw DomainError("density operator is not Hermitian");
  if (std::abs(entries_.trace() - 1.0) > tol) throw DomainError("density operator trace is not 1");
  const double smallest = hermitian_eigenvalues(entries_).minCoeff();
  if (smallest < -tol) {
    throw DomainError("density operator has negative eigenvalue " + std::to_string(smallest));
  }
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw DomainError("Hermitian eigensolver did not converge");
  return solver.eigenvalues();
}

double hermiticity_error(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double trace_distance_dense(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) throw DomainError("trace distance of operators with different dimensions");
  const Eigen::MatrixXcd diff = rho.matrix() - sigma.matrix();
  if (hermiticity_error(diff) > 1e-10) throw DomainError("trace distance needs Hermitian inputs");
  return 0.5 * hermitian_eigenvalues(diff).cwiseAbs().sum();
}

double von_neumann_entropy_bits(const Eigen::MatrixXcd& rho) {
  double entropy = 0.0;
  for (double lambda : hermitian_eigenvalues(rho)) {
    if (lambda < 0.0 && lambda >= -1e-10) lambda = 0.0;
    if (lambda < 0.0) throw DomainError("entropy of an operator with negative eigenvalue");
    if (lambda > 0.0) entropy -= lambda * std::log2(lambda);
  }
  return entropy;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::MatrixXcd tensor_power(const Eigen::MatrixXcd& a, int t) {
  if (t < 0) throw DomainError("tensor power needs t >= 0");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int i = 0; i < t; ++i) out = kron(out, a);
  return out;
}

}  // namespace uqd
