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

// JSON and CSV renderings of every result type. CSV artifacts start with
// a single "# {...}" comment line echoing the inputs, then one header
// row. Numbers use the shortest representation that round-trips.

#ifndef SOCNORM_EXPORT_HPP_
#define SOCNORM_EXPORT_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "socnorm/belief.hpp"
#include "socnorm/design.hpp"
#include "socnorm/dynamics.hpp"
#include "socnorm/equilibrium.hpp"
#include "socnorm/norm.hpp"
#include "socnorm/simulator.hpp"

namespace socnorm {

using Json = nlohmann::ordered_json;

class CsvTable {
 public:
  CsvTable(Json echo, std::vector<std::string> columns);

  void AddRow(std::vector<std::string> row);
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }
  std::string Render() const;

 private:
  Json echo_;
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

std::string Cell(double v);
std::string Cell(int v);
std::string Cell(bool v);

// Finite values as numbers, infinities as the string "inf".
Json Number(double v);

Json ToJson(const SystemParams& params);

Json ThresholdsJson(const SystemParams& params);
CsvTable ThresholdsCsv(const SystemParams& params);

struct BeliefSummary {
  BeliefDistribution dist;
  double cutoff = 0.5;
  int grid = 100;
};
Json ToJson(const BeliefSummary& s);
CsvTable ToCsv(const BeliefSummary& s);

Json ToJson(const Trajectory& t, const SystemParams& params);
CsvTable ToCsv(const Trajectory& t, const SystemParams& params);

Json ToJson(const EquilibriumReport& r);
CsvTable ToCsv(const EquilibriumReport& r);

Json ToJson(const DesignResult& d);
CsvTable ToCsv(const DesignResult& d);

Json ToJson(const SweepTable& s);
CsvTable ToCsv(const SweepTable& s);

Json ToJson(const SimConfig& c);
Json ToJson(const SimTrace& t);
CsvTable ToCsv(const SimTrace& t);

}  // namespace socnorm

#endif  // SOCNORM_EXPORT_HPP_
