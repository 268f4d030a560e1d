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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uqd/caps.hpp"
#include "uqd/rng.hpp"

namespace uqd {

/// Number of address qubits n for an address count N = 2^n (N >= 2).
/// Throws DomainError when N is not such a power of two.
int address_qubits(std::size_t address_count);

/// binomial(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// A Boolean function f : [N] -> {0,1} stored as its truth table,
/// bits[a] = f(a). Serialized as a bit string with address 0 leftmost.
class TruthTable {
 public:
  TruthTable(int qubits, std::vector<std::uint8_t> bits);

  /// Parses "0110"-style strings; the length must be a power of two >= 2.
  static TruthTable parse(std::string_view bits);

  /// The table whose bit j is bit j of `memory` (j = 0 is the least significant).
  static TruthTable from_memory_index(int qubits, std::uint64_t memory);

  int qubits() const { return qubits_; }
  std::size_t size() const { return bits_.size(); }
  std::span<const std::uint8_t> bits() const { return bits_; }
  bool operator[](std::size_t a) const { return bits_[a] != 0; }

  std::size_t weight() const;

  /// Integer whose bit j equals f(j); the memory-register basis label of M_f.
  /// Requires N <= 64.
  std::uint64_t memory_index() const;

  std::string to_string() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;
  friend auto operator<=>(const TruthTable&, const TruthTable&) = default;

 private:
  int qubits_;
  std::vector<std::uint8_t> bits_;
};

/// Exact-weight class hypothesis H_m over N addresses.
class BiasHypothesis {
 public:
  BiasHypothesis(std::size_t address_count, std::size_t weight);

  std::size_t address_count() const { return address_count_; }
  std::size_t weight() const { return weight_; }

  /// p = m/N
  double bias() const;
  /// mu = 1 - 2m/N
  double phase_bias() const;
  /// mu^2
  double phase_bias_sq() const;

  friend bool operator==(const BiasHypothesis&, const BiasHypothesis&) = default;

 private:
  std::size_t address_count_;
  std::size_t weight_;
};

/// All weight-m tables in lexicographic order of their one-positions
/// (for N=4, m=1: 1000, 0100, 0010, 0001).
std::vector<TruthTable> enumerate_weight_class(std::size_t address_count, std::size_t weight,
                                               const Caps& caps = {});

/// A uniform draw from the weight-m class via partial Fisher-Yates.
TruthTable sample_uniform(std::size_t address_count, std::size_t weight, Rng& rng);

/// (1/N) sum_a (-1)^f(a)
double phase_bias(const TruthTable& f);

/// Pointwise 1 - f.
TruthTable complement(const TruthTable& f);

}  // namespace uqd
