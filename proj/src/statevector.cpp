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

#include "uqd/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "uqd/density.hpp"
#include "uqd/errors.hpp"

namespace uqd {
namespace {

constexpr double kNormTolerance = 1e-10;

void check_unit_norm(const Eigen::VectorXcd& v, const char* what) {
  const double norm_sq = v.squaredNorm();
  if (std::abs(norm_sq - 1.0) > kNormTolerance) {
    throw DomainError(std::string(what) + " must have unit norm (got |v|^2 = " +
                      std::to_string(norm_sq) + ")");
  }
}

void check_register_cap(int address_qubits, const Caps& caps) {
  if (address_qubits > caps.max_statevector_qubits) {
    throw CapExceeded("statevector too large: n = " + std::to_string(address_qubits) +
                      " exceeds cap " + std::to_string(caps.max_statevector_qubits));
  }
}

// Largest-magnitude amplitude (first one on ties, up to 1e-12) becomes real positive.
Eigen::VectorXcd fix_global_phase(Eigen::VectorXcd v) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[best]) + 1e-12) best = i;
  }
  const double mag = std::abs(v[best]);
  if (mag > 0.0) v *= std::conj(v[best]) / mag;
  return v;
}

// |+>_A |->_D (x) memory, where `memory` is indexed by the memory basis label.
Eigen::VectorXcd probe_with_memory(int n, const Eigen::VectorXcd& memory) {
  const std::size_t size = std::size_t{1} << n;
  const std::size_t mem_dim = static_cast<std::size_t>(memory.size());
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(size * 2 * mem_dim));
  const double a_amp = 1.0 / std::sqrt(static_cast<double>(size));
  const double d_amp = 1.0 / std::sqrt(2.0);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t m = 0; m < mem_dim; ++m) {
      const Complex c = memory[static_cast<Eigen::Index>(m)];
      if (c == Complex{}) continue;
      amps[static_cast<Eigen::Index>(RegisterState::index(n, a, 0, m))] = a_amp * d_amp * c;
      amps[static_cast<Eigen::Index>(RegisterState::index(n, a, 1, m))] = -a_amp * d_amp * c;
    }
  }
  return amps;
}

}  // namespace

// ---------------------------------------------------------------------------
// AddressState

AddressState::AddressState(int qubits, Eigen::VectorXcd amplitudes)
    : qubits_(qubits), amplitudes_(std::move(amplitudes)) {
  if (qubits < 1 || qubits > 30) throw DomainError("qubit count must be in [1, 30]");
  if (static_cast<std::size_t>(amplitudes_.size()) != (std::size_t{1} << qubits)) {
    throw DomainError("address state length must equal 2^n");
  }
  check_unit_norm(amplitudes_, "address state");
}

AddressState AddressState::plus(int qubits) {
  const auto size = static_cast<Eigen::Index>(std::size_t{1} << qubits);
  return AddressState(qubits, Eigen::VectorXcd::Constant(size, 1.0 / std::sqrt(double(size))));
}

AddressState AddressState::basis(int qubits, std::size_t index) {
  const auto size = static_cast<Eigen::Index>(std::size_t{1} << qubits);
  if (static_cast<Eigen::Index>(index) >= size) throw DomainError("basis index out of range");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(size);
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return AddressState(qubits, std::move(v));
}

// ---------------------------------------------------------------------------
// RegisterState

std::size_t RegisterState::dimension(int address_qubits) {
  if (address_qubits < 1 || address_qubits > 4) {
    throw CapExceeded("statevector too large: n = " + std::to_string(address_qubits));
  }
  const std::size_t size = std::size_t{1} << address_qubits;
  return size * 2 * (std::size_t{1} << size);
}

std::size_t RegisterState::index(int address_qubits, std::size_t address, int data,
                                 std::uint64_t memory) {
  const std::size_t size = std::size_t{1} << address_qubits;
  return (address << (size + 1)) | (static_cast<std::size_t>(data) << size) | memory;
}

RegisterState::RegisterState(int address_qubits, Eigen::VectorXcd amplitudes)
    : address_qubits_(address_qubits), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != dimension(address_qubits)) {
    throw DomainError("register state length must equal 2^n * 2 * 2^N");
  }
  check_unit_norm(amplitudes_, "register state");
}

RegisterState RegisterState::basis(int address_qubits, std::size_t address, int data,
                                   std::uint64_t memory) {
  const std::size_t size = std::size_t{1} << address_qubits;
  if (address >= size || (data != 0 && data != 1) || (size < 64 && (memory >> size) != 0)) {
    throw DomainError("register basis label out of range");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dimension(address_qubits)));
  v[static_cast<Eigen::Index>(index(address_qubits, address, data, memory))] = 1.0;
  return RegisterState(address_qubits, std::move(v));
}

// ---------------------------------------------------------------------------

AddressState address_state(const TruthTable& f) {
  const double amp = 1.0 / std::sqrt(static_cast<double>(f.size()));
  Eigen::VectorXcd v(static_cast<Eigen::Index>(f.size()));
  for (std::size_t a = 0; a < f.size(); ++a) v[static_cast<Eigen::Index>(a)] = f[a] ? -amp : amp;
  return AddressState(f.qubits(), std::move(v));
}

AddressState apply_phase_oracle(const TruthTable& f, const AddressState& s) {
  if (f.size() != s.size()) throw DomainError("phase oracle and state dimensions differ");
  Eigen::VectorXcd v = s.amplitudes();
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (f[a]) v[static_cast<Eigen::Index>(a)] = -v[static_cast<Eigen::Index>(a)];
  }
  return AddressState(s.qubits(), std::move(v));
}

RegisterState apply_uqram(const RegisterState& s) {
  const int n = s.address_qubits();
  const std::size_t size = s.address_count();
  const std::size_t mem_dim = std::size_t{1} << size;
  const Eigen::VectorXcd& in = s.amplitudes();
  Eigen::VectorXcd out(in.size());
  for (std::size_t a = 0; a < size; ++a) {
    for (int y = 0; y < 2; ++y) {
      for (std::uint64_t m = 0; m < mem_dim; ++m) {
        const int y_out = y ^ static_cast<int>((m >> a) & 1U);
        out[static_cast<Eigen::Index>(RegisterState::index(n, a, y_out, m))] =
            in[static_cast<Eigen::Index>(RegisterState::index(n, a, y, m))];
      }
    }
  }
  return RegisterState(n, std::move(out));
}

AddressState hadamard_transform(const AddressState& s) {
  // Unnormalized butterfly, one global 2^{-n/2} at the end, so sign patterns
  // that cancel exactly stay exactly zero.
  Eigen::VectorXcd v = s.amplitudes();
  const auto size = v.size();
  for (Eigen::Index half = 1; half < size; half <<= 1) {
    for (Eigen::Index block = 0; block < size; block += 2 * half) {
      for (Eigen::Index i = block; i < block + half; ++i) {
        const Complex x = v[i];
        const Complex y = v[i + half];
        v[i] = x + y;
        v[i + half] = x - y;
      }
    }
  }
  v /= std::sqrt(static_cast<double>(size));
  return AddressState(s.qubits(), std::move(v));
}

Complex plus_overlap(const AddressState& s) {
  return s.amplitudes().sum() / std::sqrt(static_cast<double>(s.size()));
}

double fidelity(const AddressState& a, const AddressState& b) {
  if (a.size() != b.size()) throw DomainError("fidelity of states with different dimensions");
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

Eigen::MatrixXcd reduced_address_density(const RegisterState& s) {
  const auto size = static_cast<Eigen::Index>(s.address_count());
  const auto rest = s.amplitudes().size() / size;
  // Address-major layout: row a holds every (y, m) amplitude for address a.
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> blocks(
      s.amplitudes().data(), size, rest);
  return blocks * blocks.adjoint();
}

QueryResult probe_and_query(const TruthTable& f, const Caps& caps) {
  const int n = f.qubits();
  check_register_cap(n, caps);

  Eigen::VectorXcd memory = Eigen::VectorXcd::Zero(Eigen::Index{1} << f.size());
  memory[static_cast<Eigen::Index>(f.memory_index())] = 1.0;
  const RegisterState output = apply_uqram(RegisterState(n, probe_with_memory(n, memory)));

  // Expected product psi_f (x) |-> (x) |M_f> built in the same layout.
  const AddressState psi = address_state(f);
  Eigen::VectorXcd psi_memory = Eigen::VectorXcd::Zero(memory.size());
  psi_memory[static_cast<Eigen::Index>(f.memory_index())] = 1.0;
  Eigen::VectorXcd expected = Eigen::VectorXcd::Zero(output.amplitudes().size());
  const double d_amp = 1.0 / std::sqrt(2.0);
  for (std::size_t a = 0; a < f.size(); ++a) {
    const Complex c = psi[a];
    expected[static_cast<Eigen::Index>(RegisterState::index(n, a, 0, f.memory_index()))] = c * d_amp;
    expected[static_cast<Eigen::Index>(RegisterState::index(n, a, 1, f.memory_index()))] = -c * d_amp;
  }
  const double residual = 1.0 - std::norm(expected.dot(output.amplitudes()));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(reduced_address_density(output));
  const Eigen::Index top = solver.eigenvalues().size() - 1;
  Eigen::VectorXcd dominant = fix_global_phase(solver.eigenvectors().col(top));
  dominant.normalize();
  return {AddressState(n, std::move(dominant)), residual};
}

SuperposedQueryResult superposed_memory_query(
    const std::vector<std::pair<TruthTable, Complex>>& memory, const Caps& caps) {
  if (memory.empty()) throw DomainError("superposed memory needs at least one table");
  const int n = memory.front().first.qubits();
  check_register_cap(n, caps);

  Eigen::VectorXcd mem = Eigen::VectorXcd::Zero(Eigen::Index{1} << memory.front().first.size());
  std::map<std::uint64_t, bool> seen;
  for (const auto& [f, c] : memory) {
    if (f.qubits() != n) throw DomainError("superposed memory tables differ in size");
    const auto label = f.memory_index();
    if (!seen.emplace(label, true).second) {
      throw DomainError("table " + f.to_string() + " appears twice in superposed memory");
    }
    mem[static_cast<Eigen::Index>(label)] = c;
  }
  check_unit_norm(mem, "memory coefficients");

  RegisterState output = apply_uqram(RegisterState(n, probe_with_memory(n, mem)));
  const double entropy = von_neumann_entropy_bits(reduced_address_density(output));
  return {std::move(output), entropy};
}

nlohmann::json to_json(const AddressState& s) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t a = 0; a < s.size(); ++a) out.push_back({s[a].real(), s[a].imag()});
  return out;
}

}  // namespace uqd
