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

#include "uqd/hypothesis_test.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include <boost/math/tools/toms748_solve.hpp>

#include "uqd/errors.hpp"

namespace uqd {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_probability(double q, const char* name) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw DomainError(std::string(name) + " must lie in [0, 1], got " + std::to_string(q));
  }
}

void check_same_size(const BiasHypothesis& h0, const BiasHypothesis& h1) {
  if (h0.address_count() != h1.address_count()) {
    throw DomainError("hypotheses have different address counts");
  }
}

// log(q^k (1-q)^(t-k)) with 0 log 0 = 0; -inf for impossible counts.
double log_sequence_probability(int t, int k, double q) {
  double out = 0.0;
  if (k > 0) out += q == 0.0 ? -kInf : k * std::log(q);
  if (t - k > 0) out += q == 1.0 ? -kInf : (t - k) * std::log1p(-q);
  return out;
}

}  // namespace

int LrtRule::decide(int plus_count) const {
  if (degenerate) return 0;
  return plus_count >= threshold ? larger : 1 - larger;
}

LrtRule lrt_threshold(double mu_sq0, double mu_sq1, int queries) {
  check_probability(mu_sq0, "mu0^2");
  check_probability(mu_sq1, "mu1^2");
  if (queries < 0) throw DomainError("query count must be >= 0");

  LrtRule rule;
  rule.queries = queries;
  if (mu_sq0 == mu_sq1) {
    rule.degenerate = true;
    rule.threshold = queries + 1;
    return rule;
  }
  rule.larger = mu_sq1 > mu_sq0 ? 1 : 0;
  const double hi = std::max(mu_sq0, mu_sq1);
  const double lo = std::min(mu_sq0, mu_sq1);

  rule.threshold = queries + 1;
  for (int k = 0; k <= queries; ++k) {
    const double log_hi = log_sequence_probability(queries, k, hi);
    const double log_lo = log_sequence_probability(queries, k, lo);
    const bool both_impossible = log_hi == -kInf && log_lo == -kInf;
    // Ratio >= 1 (ties included) within a 1e-12 log margin.
    if (both_impossible || (log_hi != -kInf && log_hi - log_lo >= -1e-12)) {
      rule.threshold = k;
      break;
    }
  }
  return rule;
}

LrtRule lrt_threshold(const BiasHypothesis& h0, const BiasHypothesis& h1, int queries) {
  check_same_size(h0, h1);
  return lrt_threshold(h0.phase_bias_sq(), h1.phase_bias_sq(), queries);
}

double binomial_pmf(int trials, int k, double q) {
  check_probability(q, "success probability");
  if (trials < 0 || k < 0 || k > trials) return 0.0;
  if (q == 0.0) return k == 0 ? 1.0 : 0.0;
  if (q == 1.0) return k == trials ? 1.0 : 0.0;

  if (trials <= 60) {
    double coefficient = 1.0;
    const int j = std::min(k, trials - k);
    for (int i = 1; i <= j; ++i) coefficient = coefficient * (trials - j + i) / i;
    return coefficient * std::pow(q, k) * std::pow(1.0 - q, trials - k);
  }
  const double log_coefficient =
      std::lgamma(trials + 1.0) - std::lgamma(k + 1.0) - std::lgamma(trials - k + 1.0);
  return std::exp(log_coefficient + k * std::log(q) + (trials - k) * std::log1p(-q));
}

double exact_bayes_error(double mu_sq0, double mu_sq1, int queries) {
  const LrtRule rule = lrt_threshold(mu_sq0, mu_sq1, queries);
  if (rule.degenerate) return 0.5;
  double miss0 = 0.0;  // truth 0, decided 1
  double miss1 = 0.0;  // truth 1, decided 0
  for (int k = 0; k <= queries; ++k) {
    if (rule.decide(k) == 1) {
      miss0 += binomial_pmf(queries, k, mu_sq0);
    } else {
      miss1 += binomial_pmf(queries, k, mu_sq1);
    }
  }
  return 0.5 * (miss0 + miss1);
}

double exact_bayes_error(const BiasHypothesis& h0, const BiasHypothesis& h1, int queries) {
  check_same_size(h0, h1);
  return exact_bayes_error(h0.phase_bias_sq(), h1.phase_bias_sq(), queries);
}

ChernoffResult chernoff_information(double mu_sq0, double mu_sq1) {
  check_probability(mu_sq0, "mu0^2");
  check_probability(mu_sq1, "mu1^2");
  const double a = mu_sq0;
  const double b = mu_sq1;
  const bool on_boundary = a == 0.0 || a == 1.0 || b == 0.0 || b == 1.0;

  if (a == b) return {0.5, 0.0, on_boundary};

  if (on_boundary) {
    // On (0,1) a zero base kills its term; at least one term always dies here.
    const bool first_alive = a > 0.0 && b > 0.0;
    const bool second_alive = a < 1.0 && b < 1.0;
    if (!first_alive && !second_alive) return {0.5, kInf, true};
    const double x = first_alive ? a : 1.0 - a;
    const double y = first_alive ? b : 1.0 - b;
    // inf over s of x^s y^(1-s) is approached at an endpoint.
    return {x < y ? 1.0 : 0.0, -std::log(std::min(x, y)), true};
  }

  const double la = std::log(a), lb = std::log(b);
  const double l1a = std::log1p(-a), l1b = std::log1p(-b);
  auto objective = [&](double s) {
    return std::exp(s * la + (1.0 - s) * lb) + std::exp(s * l1a + (1.0 - s) * l1b);
  };
  // The objective is convex with F'(0) = -KL(b||a) < 0 < KL(a||b) = F'(1).
  auto slope = [&](double s) {
    return std::exp(s * la + (1.0 - s) * lb) * (la - lb) +
           std::exp(s * l1a + (1.0 - s) * l1b) * (l1a - l1b);
  };
  auto tight = [](double lo, double hi) { return hi - lo <= 1e-12; };
  std::uintmax_t max_iter = 200;
  const auto [lo, hi] = boost::math::tools::toms748_solve(slope, 0.0, 1.0, tight, max_iter);
  const double s_star = 0.5 * (lo + hi);
  return {s_star, -std::log(objective(s_star)), false};
}

double chernoff_bound(int queries, double xi) {
  if (queries < 0) throw DomainError("query count must be >= 0");
  if (!(xi >= 0.0)) throw DomainError("Chernoff information must be >= 0");
  if (queries == 0) return 0.5;
  if (xi == kInf) return 0.0;
  return 0.5 * std::exp(-queries * xi);
}

std::uint64_t queries_needed(double epsilon, double delta) {
  if (!(epsilon > 0.0 && epsilon <= 0.5)) throw DomainError("epsilon must lie in (0, 1/2]");
  if (!(delta > 0.0 && delta < 0.5)) throw DomainError("delta must lie in (0, 1/2)");
  const double mu_sq = 4.0 * epsilon * epsilon;
  if (mu_sq >= 1.0) return 1;

  auto error_at = [&](std::uint64_t t) { return 0.5 * std::pow(1.0 - mu_sq, static_cast<double>(t)); };
  const double estimate = std::log(1.0 / (2.0 * delta)) / -std::log1p(-mu_sq);
  auto t = static_cast<std::uint64_t>(std::max(1.0, std::ceil(estimate)));
  // Settle rounding at the boundary against the exact error expression.
  while (error_at(t) > delta) ++t;
  while (t > 1 && error_at(t - 1) <= delta) --t;
  return t;
}

}  // namespace uqd
