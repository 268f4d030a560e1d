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

#include "table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace uqd::cli {
namespace {

std::string csv_cell(const nlohmann::ordered_json& v) {
  switch (v.type()) {
    case nlohmann::json::value_t::number_float:
      return format_double(v.get<double>());
    case nlohmann::json::value_t::number_integer:
      return std::to_string(v.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned:
      return std::to_string(v.get<std::uint64_t>());
    case nlohmann::json::value_t::boolean:
      return v.get<bool>() ? "true" : "false";
    case nlohmann::json::value_t::string: {
      const auto& s = v.get_ref<const std::string&>();
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string quoted = "\"";
      for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      return quoted + '"';
    }
    case nlohmann::json::value_t::null:
      return "";
    default:
      return v.dump();
  }
}

// JSON has no literal for non-finite numbers; emit them as strings.
nlohmann::ordered_json json_safe(nlohmann::ordered_json v) {
  if (v.is_number_float() && !std::isfinite(v.get<double>())) return format_double(v.get<double>());
  if (v.is_structured()) {
    for (auto& item : v) item = json_safe(item);
  }
  return v;
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void Table::add_row(nlohmann::ordered_json row) {
  if (!row.is_object() || row.size() != columns_.size()) {
    throw std::logic_error("table row does not match the column set");
  }
  for (const auto& c : columns_) {
    if (!row.contains(c)) throw std::logic_error("table row is missing column " + c);
  }
  rows_.push_back(std::move(row));
}

void Table::write(std::ostream& os, Format format) const {
  if (format == Format::json) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const auto& row : rows_) {
      nlohmann::ordered_json ordered;
      for (const auto& c : columns_) ordered[c] = json_safe(row.at(c));
      array.push_back(std::move(ordered));
    }
    os << array.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << columns_[i];
  os << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      os << (i ? "," : "") << csv_cell(row.at(columns_[i]));
    }
    os << '\n';
  }
}

}  // namespace uqd::cli
