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

#include <cstddef>

namespace uqd {

/// Size limits that keep exact simulation and brute-force oracles desk-scale.
///
/// Defaults can be overridden through the environment:
///   UQD_MAX_N          largest address-qubit count for full-register statevectors
///   UQD_MAX_TCOPY_DIM  largest dimension N^t of a t-copy density operator
///   UQD_MAX_ENUM       largest exact-weight class that may be enumerated
struct Caps {
  int max_statevector_qubits = 4;
  std::size_t max_enumeration = 1'000'000;
  std::size_t max_dense_dim = 64;
  std::size_t max_tcopy_dim = 4096;

  /// Reads the UQD_* overrides; throws DomainError on malformed values.
  static Caps from_env();
};

}  // namespace uqd
