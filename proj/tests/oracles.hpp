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

// Reference computations used only by the tests. Nothing here calls into the
// code path it is used to check.

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Dense>

namespace uqd::oracle {

using Rational = boost::multiprecision::cpp_rational;

/// Index sets of every weight-m subset of [N], by filtering all 2^N masks,
/// sorted lexicographically.
inline std::vector<std::vector<std::size_t>> weight_subsets(std::size_t size, std::size_t weight) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != weight) continue;
    std::vector<std::size_t> ones;
    for (std::size_t j = 0; j < size; ++j) {
      if ((mask >> j) & 1U) ones.push_back(j);
    }
    out.push_back(std::move(ones));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// mu^2 = ((N - 2m)/N)^2 as an exact rational.
inline Rational mu_sq(std::size_t size, std::size_t weight) {
  Rational mu(static_cast<long long>(size) - 2 * static_cast<long long>(weight),
              static_cast<long long>(size));
  return mu * mu;
}

inline Rational pow(const Rational& base, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

inline Rational binomial_pmf(int t, int k, const Rational& q) {
  boost::multiprecision::cpp_int c = 1;
  for (int i = 1; i <= k; ++i) c = c * (t - k + i) / i;
  return Rational(c) * pow(q, k) * pow(1 - q, t - k);
}

/// Equal-prior Bayes error of any optimal test: (1/2) sum_k min(P0(k), P1(k)).
inline Rational bayes_error_min_sum(const Rational& q0, const Rational& q1, int t) {
  Rational sum = 0;
  for (int k = 0; k <= t; ++k) sum += std::min(binomial_pmf(t, k, q0), binomial_pmf(t, k, q1));
  return sum / 2;
}

/// Dense n-fold Hadamard matrix built by repeated Kronecker products.
inline Eigen::MatrixXcd hadamard_matrix(int n) {
  Eigen::MatrixXcd h1(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  h1 << r, r, r, -r;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index a = 0; a < out.rows(); ++a)
      for (Eigen::Index b = 0; b < out.cols(); ++b) next.block(2 * a, 2 * b, 2, 2) = out(a, b) * h1;
    out = next;
  }
  return out;
}

/// (1/2) ||A||_1 via singular values, independent of the Hermitian eigensolver.
inline double half_trace_norm(const Eigen::MatrixXcd& a) {
  return 0.5 * Eigen::JacobiSVD<Eigen::MatrixXcd>(a).singularValues().sum();
}

}  // namespace uqd::oracle
