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

#include <cstdint>

#include "uqd/boolean_functions.hpp"

namespace uqd {

/// Equal-prior likelihood-ratio test on the count k of "+" outcomes among t
/// queries. The ratio is monotone in k, so the test is a threshold: decide
/// the larger-mu^2 hypothesis iff k >= threshold. Ties go to the larger one.
struct LrtRule {
  int queries = 0;
  /// Smallest k whose likelihood ratio is >= 1; queries + 1 if none.
  int threshold = 0;
  /// Index (0 or 1) of the hypothesis with the larger mu^2.
  int larger = 0;
  /// mu0^2 == mu1^2: the rule always decides 0.
  bool degenerate = false;

  int decide(int plus_count) const;
};

LrtRule lrt_threshold(double mu_sq0, double mu_sq1, int queries);
LrtRule lrt_threshold(const BiasHypothesis& h0, const BiasHypothesis& h1, int queries);

/// binomial(t, k) q^k (1-q)^(t-k), with 0^0 = 1.
double binomial_pmf(int trials, int k, double q);

/// Bayes error of lrt_threshold under equal priors, by exact summation.
double exact_bayes_error(double mu_sq0, double mu_sq1, int queries);
double exact_bayes_error(const BiasHypothesis& h0, const BiasHypothesis& h1, int queries);

struct ChernoffResult {
  /// Minimizing s in [0, 1].
  double s_star = 0.5;
  /// Chernoff information in nats; +inf when the supports are disjoint.
  double xi = 0.0;
  /// A parameter was 0 or 1 and the continuity limit was used.
  bool boundary_case = false;
};

/// Chernoff information between Bernoulli(mu_sq0) and Bernoulli(mu_sq1).
ChernoffResult chernoff_information(double mu_sq0, double mu_sq1);

/// (1/2) exp(-t xi)
double chernoff_bound(int queries, double xi);

/// Smallest t with (1/2)(1 - 4 eps^2)^t <= delta, i.e. queries needed by the
/// separable test to tell p = 1/2 from p = 1/2 + eps with error <= delta.
std::uint64_t queries_needed(double epsilon, double delta);

}  // namespace uqd
