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

// Agent-based Monte Carlo version of the model: a finite population,
// random provider/requester matching, sampled observations and beliefs,
// threshold decisions and randomized label updates.

#ifndef SOCNORM_SIMULATOR_HPP_
#define SOCNORM_SIMULATOR_HPP_

#include <cstdint>
#include <vector>

#include "socnorm/params.hpp"

namespace socnorm {

struct SimConfig {
  SystemParams params = SystemParams::FromRatio(2.0, 0.5, 1.0, 0);
  int agents = 10000;
  int periods = 500;
  double initial_good = 0.5;
  std::uint64_t seed = 1;
  // Averaging skips the first `warmup` periods and uses at most the last
  // `window` periods.
  int warmup = 0;
  int window = 100;
};

struct PeriodRecord {
  int period = 0;
  int good_start = 0;  // good labels at the start of the period
  int inflow = 0;      // bad to good during the period
  int outflow = 0;     // good to bad during the period
  int services = 0;
  double welfare = 0.0;  // (b - c) per service

  int good_end() const { return good_start + inflow - outflow; }
};

struct SimTrace {
  SimConfig config;
  std::vector<PeriodRecord> records;

  double GoodFraction(int good) const {
    return static_cast<double>(good) / config.agents;
  }
  double FinalGoodFraction() const;
  // Mean end-of-period good fraction over the averaging window.
  double WindowAverage() const;
};

// Throws Error(kInvalidArgument) on an invalid config. Deterministic in
// the seed.
SimTrace RunSimulation(const SimConfig& config);

struct MeanFieldComparison {
  double window_average = 0.0;
  double nearest_stable_root = 0.0;
  double gap = 0.0;
  // Per-period empirical flow rates against the mean-field flow terms
  // evaluated at the period's starting good fraction.
  double mean_abs_inflow_rate_gap = 0.0;
  double mean_abs_outflow_rate_gap = 0.0;
  // Binomial z-scores of the counts, max over periods.
  double max_abs_inflow_z = 0.0;
  double max_abs_outflow_z = 0.0;
  // z-scores of the first period.
  double first_inflow_z = 0.0;
  double first_outflow_z = 0.0;
};

MeanFieldComparison CompareToMeanField(const SimTrace& trace,
                                       const SystemParams& params);

}  // namespace socnorm

#endif  // SOCNORM_SIMULATOR_HPP_
