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

#pragma once

#include <cstddef>

#include <Eigen/Dense>

namespace uqd {

/// Dense d x d density matrix. Construction checks squareness, Hermiticity
/// and unit trace to `tol`; positivity is checked by validate().
class DensityOperator {
 public:
  explicit DensityOperator(Eigen::MatrixXcd entries, double tol = 1e-10);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return entries_; }

  /// Throws DomainError if any density-operator invariant fails
  /// (including smallest eigenvalue >= -tol).
  void validate(double tol = 1e-10) const;

 private:
  Eigen::MatrixXcd entries_;
};

/// Ascending eigenvalues of a Hermitian matrix (lower triangle is read).
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m);

/// Max |m - m^dagger| entry.
double hermiticity_error(const Eigen::MatrixXcd& m);

/// (1/2) ||rho - sigma||_1 from the eigenvalues of the Hermitian difference.
/// Throws DomainError on dimension mismatch or if the difference is not
/// Hermitian within 1e-10.
double trace_distance_dense(const DensityOperator& rho, const DensityOperator& sigma);

/// -sum lambda log2 lambda with eigenvalues in [-1e-10, 0) clipped to 0.
double von_neumann_entropy_bits(const Eigen::MatrixXcd& rho);

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// a^{(x) t}, with a^{(x) 0} the 1x1 identity.
Eigen::MatrixXcd tensor_power(const Eigen::MatrixXcd& a, int t);

}  // namespace uqd
