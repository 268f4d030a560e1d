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

#include "uqd/ensemble.hpp"

#include <cmath>
#include <string>

#include "uqd/errors.hpp"
#include "uqd/statevector.hpp"

namespace uqd {
namespace {

void check_dense_cap(std::size_t dim, const Caps& caps) {
  if (dim > caps.max_dense_dim) {
    throw CapExceeded("dense dimension " + std::to_string(dim) + " exceeds cap " +
                      std::to_string(caps.max_dense_dim));
  }
}

std::size_t tcopy_dimension(std::size_t address_count, int copies, const Caps& caps) {
  if (copies < 1) throw DomainError("t-copy state needs t >= 1");
  std::size_t dim = 1;
  for (int i = 0; i < copies; ++i) {
    if (dim > caps.max_tcopy_dim / address_count) {
      throw CapExceeded("t-copy dimension " + std::to_string(address_count) + "^" +
                        std::to_string(copies) + " exceeds cap " +
                        std::to_string(caps.max_tcopy_dim));
    }
    dim *= address_count;
  }
  return dim;
}

Eigen::VectorXcd vector_power(const Eigen::VectorXcd& v, int copies) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Ones(1);
  for (int c = 0; c < copies; ++c) {
    Eigen::VectorXcd next(out.size() * v.size());
    for (Eigen::Index i = 0; i < out.size(); ++i) next.segment(i * v.size(), v.size()) = out[i] * v;
    out = std::move(next);
  }
  return out;
}

}  // namespace

TwoEigenspaceState::TwoEigenspaceState(std::size_t dimension, double plus_weight)
    : dimension_(dimension), mu_sq_(plus_weight) {
  if (dimension < 2) throw DomainError("two-eigenspace state needs dimension >= 2");
  if (!(plus_weight >= 0.0 && plus_weight <= 1.0)) throw DomainError("mu^2 must lie in [0, 1]");
}

double TwoEigenspaceState::lambda_perp() const {
  return (1.0 - mu_sq_) / static_cast<double>(dimension_ - 1);
}

TwoEigenspaceState ensemble_closed_form(const BiasHypothesis& h) {
  return TwoEigenspaceState(h.address_count(), h.phase_bias_sq());
}

DensityOperator densify(const TwoEigenspaceState& s, const Caps& caps) {
  const std::size_t size = s.dimension();
  check_dense_cap(size, caps);
  const auto d = static_cast<Eigen::Index>(size);
  // mu^2 P + lambda_perp (I - P) with P = J/N.
  const double lambda_perp = s.lambda_perp();
  const double off_diag = (s.mu_sq() - lambda_perp) / static_cast<double>(size);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Constant(d, d, off_diag);
  rho.diagonal().array() += lambda_perp;
  return DensityOperator(std::move(rho));
}

DensityOperator ensemble_brute_force(std::size_t address_count, std::size_t weight,
                                     const Caps& caps) {
  check_dense_cap(address_count, caps);
  const auto tables = enumerate_weight_class(address_count, weight, caps);
  const auto d = static_cast<Eigen::Index>(address_count);
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& f : tables) {
    const AddressState psi = address_state(f);
    sum.noalias() += psi.amplitudes() * psi.amplitudes().adjoint();
  }
  return DensityOperator(sum / static_cast<double>(tables.size()));
}

double trace_distance_closed(const BiasHypothesis& h0, const BiasHypothesis& h1) {
  if (h0.address_count() != h1.address_count()) {
    throw DomainError("hypotheses have different address counts");
  }
  return std::abs(h0.phase_bias_sq() - h1.phase_bias_sq());
}

double helstrom_success(const BiasHypothesis& h0, const BiasHypothesis& h1) {
  return 0.5 * (1.0 + trace_distance_closed(h0, h1));
}

DensityOperator t_copy_ensemble_brute(std::size_t address_count, std::size_t weight, int copies,
                                      const Caps& caps) {
  address_qubits(address_count);
  const auto d = static_cast<Eigen::Index>(tcopy_dimension(address_count, copies, caps));
  const auto tables = enumerate_weight_class(address_count, weight, caps);
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& f : tables) {
    const Eigen::VectorXcd v = vector_power(address_state(f).amplitudes(), copies);
    sum.noalias() += v * v.adjoint();
  }
  return DensityOperator(sum / static_cast<double>(tables.size()));
}

double collective_trace_distance(std::size_t address_count, std::size_t weight0,
                                 std::size_t weight1, int copies, const Caps& caps) {
  return trace_distance_dense(t_copy_ensemble_brute(address_count, weight0, copies, caps),
                              t_copy_ensemble_brute(address_count, weight1, copies, caps));
}

}  // namespace uqd
