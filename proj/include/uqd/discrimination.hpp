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
#include <vector>

#include "uqd/boolean_functions.hpp"
#include "uqd/hypothesis_test.hpp"
#include "uqd/rng.hpp"
#include "uqd/statevector.hpp"

namespace uqd {

enum class Outcome { plus, perp };

/// The {|+><+|, I - |+><+|} measurement on a fixed address state, realized as
/// H^{(x)n} followed by a computational-basis readout.
class PlusTestSampler {
 public:
  explicit PlusTestSampler(const AddressState& s);

  Outcome draw(Rng& rng) const;
  double plus_probability() const { return probabilities_.front(); }

 private:
  std::vector<double> probabilities_;
};

/// Draws f from the class once, queries it, and measures.
Outcome single_query_trial(const BiasHypothesis& truth, Rng& rng);

struct SingleCopyDecision {
  int index = 0;
  /// mu0^2 == mu1^2; the decision is a fixed tie-break at chance level.
  bool degenerate = false;
};

/// plus -> hypothesis with the larger mu^2, perp -> the other.
SingleCopyDecision decide_single_copy(Outcome outcome, const BiasHypothesis& h0,
                                      const BiasHypothesis& h1);

struct DiscriminationReport {
  double theoretical_success = 0.0;
  double empirical_success = 0.0;
  std::uint64_t trials = 0;
  /// 3 sqrt(P(1-P)/trials) at the theoretical P.
  double confidence_half_width = 0.0;
  std::uint64_t seed = 0;
  bool degenerate = false;

  bool within_ci() const;
};

/// `threads == 0` uses every hardware thread. Results do not depend on it.
DiscriminationReport run_single_copy_experiment(const BiasHypothesis& h0, const BiasHypothesis& h1,
                                                std::uint64_t trials, std::uint64_t seed,
                                                unsigned threads = 0);

/// Histogram over k = 0..t of "+" counts; each trial fixes one f and measures
/// t fresh copies of psi_f.
std::vector<std::uint64_t> multi_query_counts(const BiasHypothesis& h, int queries,
                                              std::uint64_t trials, std::uint64_t seed,
                                              unsigned threads = 0);

struct MultiQueryReport {
  int queries = 0;
  LrtRule rule;
  double exact_error = 0.0;
  double xi = 0.0;
  double chernoff_bound = 0.0;
  double empirical_error = 0.0;
  std::uint64_t trials = 0;
  /// 3 sqrt(e(1-e)/trials) at the exact error e.
  double confidence_half_width = 0.0;
  std::uint64_t seed = 0;

  bool within_ci() const;
  /// exact <= bound, up to 1e-12 relative rounding.
  bool bound_holds() const;
};

MultiQueryReport run_multi_query_experiment(const BiasHypothesis& h0, const BiasHypothesis& h1,
                                            int queries, std::uint64_t trials, std::uint64_t seed,
                                            unsigned threads = 0);

}  // namespace uqd
