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

#include "uqd/boolean_functions.hpp"
#include "uqd/caps.hpp"
#include "uqd/density.hpp"

namespace uqd {

/// rho = mu^2 |+><+| + (1 - mu^2)/(N - 1) (I - |+><+|)
///
/// The induced single-query state of an exact-weight class is fixed by two
/// numbers: the dimension and the weight of |+>. Every other direction
/// shares the same eigenvalue.
class TwoEigenspaceState {
 public:
  TwoEigenspaceState(std::size_t dimension, double plus_weight);

  std::size_t dimension() const { return dimension_; }
  double mu_sq() const { return mu_sq_; }

  /// Eigenvalue on |+> (multiplicity 1).
  double lambda_plus() const { return mu_sq_; }
  /// Eigenvalue on the orthocomplement of |+> (multiplicity N - 1).
  double lambda_perp() const;

 private:
  std::size_t dimension_;
  double mu_sq_;
};

TwoEigenspaceState ensemble_closed_form(const BiasHypothesis& h);

DensityOperator densify(const TwoEigenspaceState& s, const Caps& caps = {});

/// Average of |psi_f><psi_f| over every f of weight m.
DensityOperator ensemble_brute_force(std::size_t address_count, std::size_t weight,
                                     const Caps& caps = {});

/// |mu0^2 - mu1^2|; throws DomainError if the address counts differ.
double trace_distance_closed(const BiasHypothesis& h0, const BiasHypothesis& h1);

/// (1 + Delta) / 2 for equal priors.
double helstrom_success(const BiasHypothesis& h0, const BiasHypothesis& h1);

/// Average of (|psi_f><psi_f|)^{(x) t} over every f of weight m.
DensityOperator t_copy_ensemble_brute(std::size_t address_count, std::size_t weight, int copies,
                                      const Caps& caps = {});

/// Trace distance between the t-copy brute-force states of two weights.
double collective_trace_distance(std::size_t address_count, std::size_t weight0,
                                 std::size_t weight1, int copies, const Caps& caps = {});

}  // namespace uqd
