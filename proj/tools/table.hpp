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

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace uqd::cli {

enum class Format { csv, json };

/// Rows of named cells written either as CSV (header row, '.' decimals,
/// 17 significant digits) or as a JSON array of objects with the same keys.
class Table {
 public:
  explicit Table(std::vector<std::string> columns);

  /// Every column must be present in `row`; extra keys are rejected.
  void add_row(nlohmann::ordered_json row);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<nlohmann::ordered_json>& rows() const { return rows_; }

  void write(std::ostream& os, Format format) const;

 private:
  std::vector<std::string> columns_;
  std::vector<nlohmann::ordered_json> rows_;
};

/// printf("%.17g"); "inf", "-inf" and "nan" for non-finite values.
std::string format_double(double value);

}  // namespace uqd::cli
