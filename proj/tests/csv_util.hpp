// Copyright 2026 The socnorm Authors.
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

// Minimal reader for the CSV artifacts: one "# {json}" echo line, one
// header row, then rows of plain cells.

#ifndef SOCNORM_TESTS_CSV_UTIL_HPP_
#define SOCNORM_TESTS_CSV_UTIL_HPP_

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace socnorm::testing {

struct ParsedCsv {
  nlohmann::ordered_json echo;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int Column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return static_cast<int>(i);
    }
    return -1;
  }
  double Number(std::size_t row, const std::string& name) const {
    return std::stod(rows.at(row).at(static_cast<std::size_t>(Column(name))));
  }
};

inline std::vector<std::string> SplitCells(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

inline ParsedCsv ParseCsv(const std::string& text) {
  ParsedCsv out;
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);
  if (line.rfind("# ", 0) == 0) out.echo = nlohmann::ordered_json::parse(line.substr(2));
  std::getline(is, line);
  out.header = SplitCells(line);
  while (std::getline(is, line)) {
    if (!line.empty()) out.rows.push_back(SplitCells(line));
  }
  return out;
}

}  // namespace socnorm::testing

#endif  // SOCNORM_TESTS_CSV_UTIL_HPP_
