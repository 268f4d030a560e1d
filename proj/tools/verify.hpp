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

#include <string>
#include <vector>

#include "uqd/caps.hpp"

namespace uqd::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  /// The statistic compared against `threshold` (a max error, or a distance
  /// that must exceed the threshold for "gt" checks).
  double statistic = 0.0;
  double threshold = 0.0;
  /// "le" or "gt"
  std::string comparison = "le";
  std::size_t cases = 0;
};

struct VerifyOptions {
  /// Largest address-qubit count exercised; ensemble suites use N <= min(2^max_n, 16)
  /// and the full-register suite uses n <= min(max_n, 3).
  int max_n = 4;
  /// Test-only: corrupts one brute-force matrix entry.
  bool inject_fault = false;
};

std::vector<CheckResult> run_verification_suite(const VerifyOptions& options, const Caps& caps);

}  // namespace uqd::cli
