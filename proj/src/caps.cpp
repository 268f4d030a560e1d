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

#include "uqd/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "uqd/errors.hpp"

namespace uqd {
namespace {

template <class T>
void override_from_env(const char* name, T& value) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  std::string_view text(raw);
  T parsed{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
  if (ec != std::errc{} || ptr != text.data() + text.size() || parsed <= 0) {
    throw DomainError(std::string(name) + ": expected a positive integer, got '" +
                      std::string(text) + "'");
  }
  value = parsed;
}

}  // namespace

Caps Caps::from_env() {
  Caps caps;
  override_from_env("UQD_MAX_N", caps.max_statevector_qubits);
  override_from_env("UQD_MAX_TCOPY_DIM", caps.max_tcopy_dim);
  override_from_env("UQD_MAX_ENUM", caps.max_enumeration);
  return caps;
}

}  // namespace uqd
