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

#include "doctest.h"

#include <cmath>
#include <numeric>

#include <boost/math/distributions/binomial.hpp>

#include "oracles.hpp"
#include "uqd/discrimination.hpp"
#include "uqd/ensemble.hpp"
#include "uqd/errors.hpp"

using namespace uqd;

TEST_SUITE("discrimination") {
  TEST_CASE("plus probability equals mu^2 for every function") {
    const Caps caps;
    for (std::size_t size : {2, 4, 8, 16}) {
      for (std::size_t m = 0; m <= size; ++m) {
        const double expected = static_cast<double>(oracle::mu_sq(size, m));
        for (const TruthTable& f : enumerate_weight_class(size, m, caps)) {
          REQUIRE(std::abs(PlusTestSampler(address_state(f)).plus_probability() - expected) <= 1e-14);
        }
      }
    }
  }

  TEST_CASE("single_query_trial examples") {
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
      REQUIRE(single_query_trial(BiasHypothesis(8, 0), rng) == Outcome::plus);
      REQUIRE(single_query_trial(BiasHypothesis(8, 8), rng) == Outcome::plus);
      REQUIRE(single_query_trial(BiasHypothesis(8, 4), rng) == Outcome::perp);
    }
    const int trials = 100000;
    int plus = 0;
    for (int i = 0; i < trials; ++i) plus += single_query_trial(BiasHypothesis(4, 1), rng) == Outcome::plus;
    const double freq = static_cast<double>(plus) / trials;
    CHECK(std::abs(freq - 0.25) <= 3.0 * std::sqrt(0.25 * 0.75 / trials));
  }

  TEST_CASE("decide_single_copy") {
    const BiasHypothesis constant(4, 0), balanced(4, 2), quarter(4, 1);
    CHECK(decide_single_copy(Outcome::plus, constant, balanced).index == 0);
    CHECK(decide_single_copy(Outcome::perp, constant, balanced).index == 1);
    CHECK(decide_single_copy(Outcome::plus, balanced, quarter).index == 1);
    CHECK(decide_single_copy(Outcome::perp, balanced, quarter).index == 0);
    const auto tie = decide_single_copy(Outcome::plus, quarter, BiasHypothesis(4, 3));
    CHECK(tie.degenerate);
    CHECK(tie.index == 0);
    CHECK_THROWS_AS(decide_single_copy(Outcome::plus, constant, BiasHypothesis(8, 4)), DomainError);
  }

  TEST_CASE("run_single_copy_experiment examples") {
    const auto dj = run_single_copy_experiment(BiasHypothesis(4, 0), BiasHypothesis(4, 2), 10000, 1);
    CHECK(dj.theoretical_success == 1.0);
    CHECK(dj.empirical_success == 1.0);
    CHECK(dj.within_ci());

    const auto tie = run_single_copy_experiment(BiasHypothesis(4, 1), BiasHypothesis(4, 3), 10000, 2);
    CHECK(tie.degenerate);
    CHECK(tie.theoretical_success == 0.5);
    CHECK(tie.within_ci());

    for (std::size_t m1 : {1, 3}) {
      const BiasHypothesis h0(8, 0), h1(8, m1);
      const auto r = run_single_copy_experiment(h0, h1, 20000, 3);
      CHECK(r.theoretical_success == helstrom_success(h0, h1));
      CHECK(r.trials == 20000);
      CHECK(r.seed == 3);
      CHECK(r.confidence_half_width ==
            doctest::Approx(3.0 * std::sqrt(r.theoretical_success * (1 - r.theoretical_success) / 20000)));
      CHECK(r.within_ci());
    }
    CHECK_THROWS_AS(run_single_copy_experiment(BiasHypothesis(4, 0), BiasHypothesis(4, 1), 0, 1),
                    DomainError);
  }

  TEST_CASE("experiments are reproducible and independent of thread count") {
    const BiasHypothesis h0(8, 1), h1(8, 2);
    const auto a = run_single_copy_experiment(h0, h1, 5000, 99, 1);
    const auto b = run_single_copy_experiment(h0, h1, 5000, 99, 4);
    const auto c = run_single_copy_experiment(h0, h1, 5000, 99, 1);
    CHECK(a.empirical_success == b.empirical_success);
    CHECK(a.empirical_success == c.empirical_success);
    const auto d = run_single_copy_experiment(h0, h1, 5000, 100, 1);
    CHECK(a.empirical_success != d.empirical_success);

    CHECK(multi_query_counts(h1, 6, 3000, 5, 1) == multi_query_counts(h1, 6, 3000, 5, 3));
    const auto m1 = run_multi_query_experiment(h0, h1, 5, 4000, 8, 1);
    const auto m4 = run_multi_query_experiment(h0, h1, 5, 4000, 8, 4);
    CHECK(m1.empirical_error == m4.empirical_error);
  }

  TEST_CASE("multi_query_counts follows Binomial(t, mu^2)") {
    const auto constant = multi_query_counts(BiasHypothesis(4, 0), 7, 1000, 1);
    CHECK(constant.size() == 8);
    CHECK(constant[7] == 1000);
    const auto balanced = multi_query_counts(BiasHypothesis(4, 2), 7, 1000, 1);
    CHECK(balanced[0] == 1000);

    const int t = 10;
    const std::uint64_t trials = 100000;
    const auto counts = multi_query_counts(BiasHypothesis(4, 1), t, trials, 2024);
    CHECK(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}) == trials);
    const boost::math::binomial_distribution<double> reference(t, 0.25);
    double tv = 0.0;
    for (int k = 0; k <= t; ++k) {
      tv += std::abs(static_cast<double>(counts[k]) / trials - boost::math::pdf(reference, k));
    }
    CHECK(0.5 * tv <= 0.01);
    CHECK_THROWS_AS(multi_query_counts(BiasHypothesis(4, 1), 0, 10, 1), DomainError);
  }

  TEST_CASE("run_multi_query_experiment examples") {
    // mu^2 = 49/64 against 1/4.
    const BiasHypothesis h0(16, 1), h1(16, 4);
    const auto q0 = oracle::mu_sq(16, 1), q1 = oracle::mu_sq(16, 4);
    for (int t : {1, 3, 10}) {
      const auto r = run_multi_query_experiment(h0, h1, t, 20000, 17);
      CHECK(r.queries == t);
      CHECK(std::abs(r.exact_error - static_cast<double>(oracle::bayes_error_min_sum(q0, q1, t))) <= 1e-12);
      CHECK(r.xi == doctest::Approx(chernoff_information(49.0 / 64, 0.25).xi));
      CHECK(r.bound_holds());
      CHECK(r.within_ci());
    }

    const auto balanced_null = run_multi_query_experiment(BiasHypothesis(4, 2), BiasHypothesis(4, 1), 3, 20000, 4);
    CHECK(balanced_null.rule.threshold == 1);
    CHECK(balanced_null.exact_error == doctest::Approx(0.5 * std::pow(0.75, 3)).epsilon(1e-14));
    CHECK(balanced_null.within_ci());
    CHECK(balanced_null.bound_holds());

    const auto tie = run_multi_query_experiment(BiasHypothesis(8, 2), BiasHypothesis(8, 6), 4, 5000, 5);
    CHECK(tie.rule.degenerate);
    CHECK(tie.exact_error == 0.5);
    CHECK(tie.xi == 0.0);
    CHECK(tie.chernoff_bound == 0.5);
    CHECK(tie.within_ci());
  }
}
