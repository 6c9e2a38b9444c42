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


// Table rendering for the command-line tool. Floats are printed as the
// shortest round-trip representation when it fits the precision cap, and in
// %g style at the cap otherwise, so output is byte-stable.

#ifndef WT_CLI_OUTPUT_HPP_
#define WT_CLI_OUTPUT_HPP_

#include <string>
#include <variant>
#include <vector>

namespace wt::cli {

using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { kCsv, kJson };

struct OutputSpec {
  Format format = Format::kCsv;
  int precision = 12;
  std::string destination;  // empty: standard output
};

inline constexpr int kDefaultPrecision = 12;
inline constexpr int kMinPrecision = 1;
inline constexpr int kMaxPrecision = 30;

// kDefaultPrecision unless WT_PRECISION holds a valid override.
int default_precision();

std::string format_double(double value, int precision);
std::string render(const Table& table, const OutputSpec& spec);

}  // namespace wt::cli

#endif  // WT_CLI_OUTPUT_HPP_
