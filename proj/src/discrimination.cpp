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

#include "uqd/discrimination.hpp"

#include <cmath>
#include <random>

#include "uqd/ensemble.hpp"
#include "uqd/errors.hpp"
#include "uqd/parallel.hpp"

namespace uqd {
namespace {

void check_pair(const BiasHypothesis& h0, const BiasHypothesis& h1) {
  if (h0.address_count() != h1.address_count()) {
    throw DomainError("hypotheses have different address counts");
  }
}

double three_sigma(double p, std::uint64_t trials) {
  return 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

int draw_truth(Rng& rng) { return std::bernoulli_distribution(0.5)(rng) ? 1 : 0; }

}  // namespace

PlusTestSampler::PlusTestSampler(const AddressState& s) {
  const AddressState rotated = hadamard_transform(s);
  probabilities_.resize(rotated.size());
  for (std::size_t i = 0; i < rotated.size(); ++i) probabilities_[i] = std::norm(rotated[i]);
}

Outcome PlusTestSampler::draw(Rng& rng) const {
  std::discrete_distribution<std::size_t> readout(probabilities_.begin(), probabilities_.end());
  return readout(rng) == 0 ? Outcome::plus : Outcome::perp;
}

Outcome single_query_trial(const BiasHypothesis& truth, Rng& rng) {
  const TruthTable f = sample_uniform(truth.address_count(), truth.weight(), rng);
  return PlusTestSampler(address_state(f)).draw(rng);
}

SingleCopyDecision decide_single_copy(Outcome outcome, const BiasHypothesis& h0,
                                      const BiasHypothesis& h1) {
  check_pair(h0, h1);
  const double a = h0.phase_bias_sq();
  const double b = h1.phase_bias_sq();
  if (a == b) return {0, true};
  const int larger = b > a ? 1 : 0;
  return {outcome == Outcome::plus ? larger : 1 - larger, false};
}

bool DiscriminationReport::within_ci() const {
  return std::abs(empirical_success - theoretical_success) <= confidence_half_width + 1e-12;
}

DiscriminationReport run_single_copy_experiment(const BiasHypothesis& h0, const BiasHypothesis& h1,
                                                std::uint64_t trials, std::uint64_t seed,
                                                unsigned threads) {
  check_pair(h0, h1);
  if (trials == 0) throw DomainError("experiment needs at least one trial");

  const std::uint64_t successes = parallel_reduce(
      trials, threads, std::uint64_t{0},
      [&](std::uint64_t& acc, std::uint64_t i) {
        Rng rng = trial_rng(seed, i);
        const int truth = draw_truth(rng);
        const Outcome outcome = single_query_trial(truth == 0 ? h0 : h1, rng);
        if (decide_single_copy(outcome, h0, h1).index == truth) ++acc;
      },
      [](std::uint64_t& into, std::uint64_t from) { into += from; });

  DiscriminationReport report;
  report.theoretical_success = helstrom_success(h0, h1);
  report.empirical_success = static_cast<double>(successes) / static_cast<double>(trials);
  report.trials = trials;
  report.confidence_half_width = three_sigma(report.theoretical_success, trials);
  report.seed = seed;
  report.degenerate = h0.phase_bias_sq() == h1.phase_bias_sq();
  return report;
}

std::vector<std::uint64_t> multi_query_counts(const BiasHypothesis& h, int queries,
                                              std::uint64_t trials, std::uint64_t seed,
                                              unsigned threads) {
  if (queries < 1) throw DomainError("multi-query experiment needs t >= 1");
  using Histogram = std::vector<std::uint64_t>;
  return parallel_reduce(
      trials, threads, Histogram(static_cast<std::size_t>(queries) + 1, 0),
      [&](Histogram& acc, std::uint64_t i) {
        Rng rng = trial_rng(seed, i);
        // The memory is drawn once per trial and held fixed across queries.
        const PlusTestSampler sampler(address_state(sample_uniform(h.address_count(), h.weight(), rng)));
        int k = 0;
        for (int q = 0; q < queries; ++q) k += sampler.draw(rng) == Outcome::plus;
        ++acc[static_cast<std::size_t>(k)];
      },
      [](Histogram& into, const Histogram& from) {
        for (std::size_t k = 0; k < into.size(); ++k) into[k] += from[k];
      });
}

bool MultiQueryReport::within_ci() const {
  return std::abs(empirical_error - exact_error) <= confidence_half_width + 1e-12;
}

bool MultiQueryReport::bound_holds() const {
  return exact_error <= chernoff_bound * (1.0 + 1e-12);
}

MultiQueryReport run_multi_query_experiment(const BiasHypothesis& h0, const BiasHypothesis& h1,
                                            int queries, std::uint64_t trials, std::uint64_t seed,
                                            unsigned threads) {
  check_pair(h0, h1);
  if (queries < 1) throw DomainError("multi-query experiment needs t >= 1");
  if (trials == 0) throw DomainError("experiment needs at least one trial");

  const LrtRule rule = lrt_threshold(h0, h1, queries);
  const std::uint64_t errors = parallel_reduce(
      trials, threads, std::uint64_t{0},
      [&](std::uint64_t& acc, std::uint64_t i) {
        Rng rng = trial_rng(seed, i);
        const int truth = draw_truth(rng);
        const BiasHypothesis& h = truth == 0 ? h0 : h1;
        const PlusTestSampler sampler(address_state(sample_uniform(h.address_count(), h.weight(), rng)));
        int k = 0;
        for (int q = 0; q < queries; ++q) k += sampler.draw(rng) == Outcome::plus;
        if (rule.decide(k) != truth) ++acc;
      },
      [](std::uint64_t& into, std::uint64_t from) { into += from; });

  MultiQueryReport report;
  report.queries = queries;
  report.rule = rule;
  report.exact_error = exact_bayes_error(h0, h1, queries);
  report.xi = chernoff_information(h0.phase_bias_sq(), h1.phase_bias_sq()).xi;
  report.chernoff_bound = uqd::chernoff_bound(queries, report.xi);
  report.empirical_error = static_cast<double>(errors) / static_cast<double>(trials);
  report.trials = trials;
  report.confidence_half_width = three_sigma(report.exact_error, trials);
  report.seed = seed;
  return report;
}

}  // namespace uqd
