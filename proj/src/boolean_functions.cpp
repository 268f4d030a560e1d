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

#include "uqd/boolean_functions.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "uqd/errors.hpp"

namespace uqd {

int address_qubits(std::size_t address_count) {
  if (address_count < 2 || !std::has_single_bit(address_count)) {
    throw DomainError("address count must be a power of two >= 2, got " +
                      std::to_string(address_count));
  }
  return std::countr_zero(address_count);
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral; divide by the gcd first.
    std::uint64_t num = n - k + i;
    std::uint64_t den = i;
    const std::uint64_t g = std::gcd(result, den);
    std::uint64_t r = result / g;
    den /= g;
    num /= den;  // den | num once the shared factor with result is gone
    if (r > kMax / num) return kMax;
    result = r * num;
  }
  return result;
}

// ---------------------------------------------------------------------------
// TruthTable

TruthTable::TruthTable(int qubits, std::vector<std::uint8_t> bits)
    : qubits_(qubits), bits_(std::move(bits)) {
  if (qubits < 1 || qubits > 30) throw DomainError("qubit count must be in [1, 30]");
  if (bits_.size() != (std::size_t{1} << qubits)) {
    throw DomainError("truth table length must equal 2^n");
  }
  for (auto b : bits_) {
    if (b > 1) throw DomainError("truth table entries must be 0 or 1");
  }
}

TruthTable TruthTable::parse(std::string_view text) {
  const int n = address_qubits(text.size());
  std::vector<std::uint8_t> bits(text.size());
  for (std::size_t a = 0; a < text.size(); ++a) {
    if (text[a] != '0' && text[a] != '1') {
      throw DomainError("truth table string may only contain '0' and '1'");
    }
    bits[a] = static_cast<std::uint8_t>(text[a] - '0');
  }
  return TruthTable(n, std::move(bits));
}

TruthTable TruthTable::from_memory_index(int qubits, std::uint64_t memory) {
  if (qubits < 1 || qubits > 6) throw DomainError("memory index form needs 1 <= n <= 6");
  const std::size_t size = std::size_t{1} << qubits;
  if (size < 64 && (memory >> size) != 0) throw DomainError("memory index out of range");
  std::vector<std::uint8_t> bits(size);
  for (std::size_t j = 0; j < size; ++j) bits[j] = static_cast<std::uint8_t>((memory >> j) & 1U);
  return TruthTable(qubits, std::move(bits));
}

std::size_t TruthTable::weight() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::uint64_t TruthTable::memory_index() const {
  if (bits_.size() > 64) throw DomainError("memory index needs N <= 64");
  std::uint64_t m = 0;
  for (std::size_t j = 0; j < bits_.size(); ++j) m |= std::uint64_t{bits_[j]} << j;
  return m;
}

std::string TruthTable::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t a = 0; a < bits_.size(); ++a) {
    if (bits_[a]) s[a] = '1';
  }
  return s;
}

// ---------------------------------------------------------------------------
// BiasHypothesis

BiasHypothesis::BiasHypothesis(std::size_t address_count, std::size_t weight)
    : address_count_(address_count), weight_(weight) {
  address_qubits(address_count);
  if (weight > address_count) {
    throw DomainError("weight " + std::to_string(weight) + " exceeds address count " +
                      std::to_string(address_count));
  }
}

double BiasHypothesis::bias() const {
  return static_cast<double>(weight_) / static_cast<double>(address_count_);
}

double BiasHypothesis::phase_bias() const {
  // (N - 2m)/N is a single rounding of the exact rational.
  const auto numerator = static_cast<double>(address_count_) - 2.0 * static_cast<double>(weight_);
  return numerator / static_cast<double>(address_count_);
}

double BiasHypothesis::phase_bias_sq() const {
  const double mu = phase_bias();
  return mu * mu;
}

// ---------------------------------------------------------------------------

std::vector<TruthTable> enumerate_weight_class(std::size_t address_count, std::size_t weight,
                                               const Caps& caps) {
  const int n = address_qubits(address_count);
  if (weight > address_count) throw DomainError("weight exceeds address count");
  const std::uint64_t count = binomial(address_count, weight);
  if (count > caps.max_enumeration) {
    throw CapExceeded("class too large to enumerate: binomial(" + std::to_string(address_count) +
                      ", " + std::to_string(weight) + ") exceeds cap " +
                      std::to_string(caps.max_enumeration));
  }

  std::vector<TruthTable> tables;
  tables.reserve(count);

  // One-positions as an increasing index combination, advanced lexicographically.
  std::vector<std::size_t> ones(weight);
  std::iota(ones.begin(), ones.end(), std::size_t{0});
  while (true) {
    std::vector<std::uint8_t> bits(address_count, 0);
    for (auto j : ones) bits[j] = 1;
    tables.emplace_back(n, std::move(bits));

    std::size_t i = weight;
    while (i > 0 && ones[i - 1] == address_count - weight + (i - 1)) --i;
    if (i == 0) break;
    ++ones[i - 1];
    for (std::size_t j = i; j < weight; ++j) ones[j] = ones[j - 1] + 1;
  }
  return tables;
}

TruthTable sample_uniform(std::size_t address_count, std::size_t weight, Rng& rng) {
  const int n = address_qubits(address_count);
  if (weight > address_count) throw DomainError("weight exceeds address count");

  std::vector<std::size_t> index(address_count);
  std::iota(index.begin(), index.end(), std::size_t{0});
  std::vector<std::uint8_t> bits(address_count, 0);
  for (std::size_t i = 0; i < weight; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, address_count - 1);
    std::swap(index[i], index[pick(rng)]);
    bits[index[i]] = 1;
  }
  return TruthTable(n, std::move(bits));
}

double phase_bias(const TruthTable& f) {
  double sum = 0.0;
  for (auto b : f.bits()) sum += b ? -1.0 : 1.0;
  return sum / static_cast<double>(f.size());
}

TruthTable complement(const TruthTable& f) {
  std::vector<std::uint8_t> bits(f.bits().begin(), f.bits().end());
  for (auto& b : bits) b ^= 1U;
  return TruthTable(f.qubits(), std::move(bits));
}

}  // namespace uqd
