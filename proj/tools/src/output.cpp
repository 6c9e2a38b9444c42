// Copyright 2026 The wt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "wt_cli/output.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wt::cli {

namespace {

int significant_digits(const char* begin, const char* end) {
  int digits = 0;
  bool leading = true;
  int trailing_zeros = 0;
  for (const char* p = begin; p != end; ++p) {
    const char c = *p;
    if (c == 'e' || c == 'E') break;
    if (c < '0' || c > '9') continue;
    if (leading && c == '0') continue;
    leading = false;
    ++digits;
    trailing_zeros = c == '0' ? trailing_zeros + 1 : 0;
  }
  return digits - trailing_zeros;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

int default_precision() {
  const char* env = std::getenv("WT_PRECISION");
  if (env == nullptr || *env == '\0') return kDefaultPrecision;
  int value = 0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value < kMinPrecision || value > kMaxPrecision) {
    throw std::invalid_argument("WT_PRECISION must be an integer in [1, 30]");
  }
  return value;
}

std::string format_double(double value, int precision) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  if (significant_digits(buf, res.ptr) > precision) {
    res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, precision);
  }
  return std::string(buf, res.ptr);
}

std::string render(const Table& table, const OutputSpec& spec) {
  std::ostringstream os;
  if (spec.format == Format::kCsv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      os << (i ? "," : "") << csv_escape(table.columns[i]);
    }
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os << ',';
        const Cell& c = row[i];
        if (const auto* d = std::get_if<double>(&c)) {
          os << format_double(*d, spec.precision);
        } else if (const auto* n = std::get_if<long long>(&c)) {
          os << *n;
        } else if (const auto* s = std::get_if<std::string>(&c)) {
          os << csv_escape(*s);
        }
      }
      os << '\n';
    }
    return os.str();
  }

  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      const Cell& c = row[i];
      auto& slot = rec[table.columns[i]];
      if (const auto* d = std::get_if<double>(&c)) {
        // Round through the printed text so JSON and CSV carry the same value.
        if (std::isfinite(*d)) {
          slot = std::strtod(format_double(*d, spec.precision).c_str(), nullptr);
        } else {
          slot = nullptr;
        }
      } else if (const auto* n = std::get_if<long long>(&c)) {
        slot = *n;
      } else if (const auto* s = std::get_if<std::string>(&c)) {
        slot = *s;
      } else {
        slot = nullptr;
      }
    }
    records.push_back(std::move(rec));
  }
  return records.dump(2) + "\n";
}

}  // namespace wt::cli
