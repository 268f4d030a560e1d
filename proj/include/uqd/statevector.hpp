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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include "json.hpp"

#include "uqd/boolean_functions.hpp"
#include "uqd/caps.hpp"

namespace uqd {

using Complex = std::complex<double>;

/// Unit-norm state of the n-qubit address register.
class AddressState {
 public:
  /// Throws DomainError unless the length is 2^qubits and the norm is 1 within 1e-10.
  AddressState(int qubits, Eigen::VectorXcd amplitudes);

  /// |+> = (1/sqrt N) sum_a |a>
  static AddressState plus(int qubits);
  static AddressState basis(int qubits, std::size_t index);

  int qubits() const { return qubits_; }
  std::size_t size() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t a) const { return amplitudes_[static_cast<Eigen::Index>(a)]; }

 private:
  int qubits_;
  Eigen::VectorXcd amplitudes_;
};

/// Joint state of address A (n qubits), data D (1 qubit) and memory M
/// (N = 2^n qubits). Basis (a, y, m) sits at index a*2^(N+1) + y*2^N + m,
/// where bit j of m is memory cell j.
class RegisterState {
 public:
  RegisterState(int address_qubits, Eigen::VectorXcd amplitudes);

  static RegisterState basis(int address_qubits, std::size_t address, int data,
                             std::uint64_t memory);

  /// Amplitude vector length 2^n * 2 * 2^N; throws CapExceeded past `max_qubits`.
  static std::size_t dimension(int address_qubits);
  static std::size_t index(int address_qubits, std::size_t address, int data,
                           std::uint64_t memory);

  int address_qubits() const { return address_qubits_; }
  std::size_t address_count() const { return std::size_t{1} << address_qubits_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }

 private:
  int address_qubits_;
  Eigen::VectorXcd amplitudes_;
};

/// psi_f = P_f |+> = (1/sqrt N) sum_a (-1)^f(a) |a>
AddressState address_state(const TruthTable& f);

/// Multiplies amplitude a by (-1)^f(a).
AddressState apply_phase_oracle(const TruthTable& f, const AddressState& s);

/// The U-QRAM permutation |a>|y>|m> -> |a>|y xor m_a>|m>.
RegisterState apply_uqram(const RegisterState& s);

/// n-fold Hadamard via an in-place radix-2 butterfly.
AddressState hadamard_transform(const AddressState& s);

/// <+|s>
Complex plus_overlap(const AddressState& s);

/// |<a|b>|^2
double fidelity(const AddressState& a, const AddressState& b);

struct QueryResult {
  /// Dominant eigenvector of the address register's reduced state, phase fixed
  /// so the first largest-magnitude amplitude is real and positive.
  AddressState address;
  /// 1 - |<psi_f (x) - (x) M_f | output>|^2
  double residual;
};

/// Runs one U-QRAM query on |+>_A |->_D |M_f>_M and extracts the address state.
QueryResult probe_and_query(const TruthTable& f, const Caps& caps = {});

struct SuperposedQueryResult {
  RegisterState output;
  /// von Neumann entropy (bits) of the address register after the query.
  double entropy_bits;
};

/// Queries a memory prepared in sum_f c_f |M_f>. All tables must share one size,
/// be distinct, and the coefficients must have unit norm within 1e-10.
SuperposedQueryResult superposed_memory_query(
    const std::vector<std::pair<TruthTable, Complex>>& memory, const Caps& caps = {});

/// Partial trace over D (x) M.
Eigen::MatrixXcd reduced_address_density(const RegisterState& s);

/// [[re, im], ...] debugging dump.
nlohmann::json to_json(const AddressState& s);

}  // namespace uqd
